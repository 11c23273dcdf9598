#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bodyorder/convex_position.hpp"
#include "bodyorder/errors.hpp"
#include "bodyorder/famgen.hpp"
#include "bodyorder/io.hpp"
#include "bodyorder/order_type.hpp"
#include "bodyorder/predicates.hpp"
#include "bodyorder/svg.hpp"

namespace bodyorder {

inline constexpr int kExitOk = 0;            // computed, property holds
inline constexpr int kExitPropertyFalse = 1; // computed, property fails
inline constexpr int kExitInvalidInput = 2;  // bad input or undefined config
inline constexpr int kExitSizeLimit = 3;     // size or sampling budget hit

namespace cli_detail {

inline Family load_family(const std::string& path) {
  return family_from_json(read_json_file(path));
}

inline int find_body(const Family& f, const std::string& id) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i].id == id) return static_cast<int>(i);
  throw std::invalid_argument("no body with id '" + id + "'");
}

inline nlohmann::json id_list(const Family& f, const std::vector<int>& idx) {
  nlohmann::json a = nlohmann::json::array();
  for (int i : idx) a.push_back(f[i].id);
  return a;
}

inline nlohmann::json result(const std::string& command) {
  return {{"schema", kResultSchema}, {"command", command}};
}

inline void emit(std::ostream& out, const nlohmann::json& j) {
  out << j.dump(2) << "\n";
}

inline nlohmann::json orientation_to_json(const OrientationSet& s) {
  nlohmann::json a = nlohmann::json::array();
  if (s.ccw) a.push_back("+");
  if (s.cw) a.push_back("-");
  return a;
}

inline nlohmann::json transversal_to_json(const Family& f,
                                          const TransversalCertificate& c) {
  return {{"line", line_to_json(c.line)}, {"members", id_list(f, c.members)}};
}

}  // namespace cli_detail

/// Entry point shared by the binary and the tests. Returns the process exit
/// code and writes results as JSON documents to `out`.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  using cli_detail::emit;
  using cli_detail::result;

  CLI::App app{"exact predicates on families of convex bodies in the plane"};
  app.require_subcommand(1);

  std::string file, out_path, points_path, fixture_name, kind_name_opt,
      spec_path;
  std::vector<std::string> triple_ids;
  std::string convention = "+";
  bool exists_mode = false, draw_hull = false, draw_transversal = false,
       draw_order = false;
  int opt_t = 3, opt_n = 3, opt_count = 5, opt_vertices = 4, opt_min = -1;
  int bounds_n = 0, bounds_k = 0, bounds_l = 0;
  std::vector<long> line_coeffs;
  long budget = 2000000;
  std::uint64_t seed = 1;

  CLI::App* c_check = app.add_subcommand(
      "check", "validate a family file and scan for tangency-type contacts");
  c_check->add_option("file", file)->required();

  CLI::App* c_orient = app.add_subcommand(
      "orient", "orientation set of an ordered triple of bodies");
  c_orient->add_option("file", file)->required();
  c_orient->add_option("--triple", triple_ids, "three body ids, in order")
      ->expected(3)
      ->required();

  CLI::App* c_cp = app.add_subcommand(
      "convex-position",
      "whether every member contributes to the joint hull");
  c_cp->add_option("file", file)->required();
  c_cp->add_flag("--exists", exists_mode,
                 "instead search for an ordering whose triples all read "
                 "counterclockwise");

  CLI::App* c_order =
      app.add_subcommand("order", "member order along the hull boundary");
  c_order->add_option("file", file)->required();
  c_order->add_option("--convention", convention, "+ (ccw) or - (cw)")
      ->check(CLI::IsMember({"+", "-"}));

  CLI::App* c_sub = app.add_subcommand(
      "subfamily", "largest subfamily in convex position (families up to 15)");
  c_sub->add_option("file", file)->required();

  CLI::App* c_tr =
      app.add_subcommand("transversal", "search for a line meeting every member");
  c_tr->add_option("file", file)->required();
  c_tr->add_option("--min", opt_min,
                   "accept a line meeting at least this many members "
                   "(default: all of them)");

  CLI::App* c_dich = app.add_subcommand(
      "dichotomy",
      "find a line meeting t members or n members in convex position");
  c_dich->add_option("file", file)->required();
  c_dich->add_option("-t,--line-members", opt_t, "members a line must meet")
      ->required();
  c_dich->add_option("-n,--convex-members", opt_n,
                     "size of the convex-position subfamily")
      ->required();

  CLI::App* c_chi = app.add_subcommand(
      "chirotope", "triple sign map of a family whose triples read one way");
  c_chi->add_option("file", file)->required();

  CLI::App* c_rep = app.add_subcommand(
      "represent", "search for or verify a point representation");
  c_rep->add_option("file", file)->required();
  c_rep->add_option("--verify", points_path,
                    "points document to verify instead of searching");
  c_rep->add_option("--budget", budget, "grid search node budget");
  c_rep->add_option("--seed", seed, "perturbation seed");
  c_rep->add_option("--save-points", out_path,
                    "write the found certificate as a points document");

  CLI::App* c_bounds = app.add_subcommand(
      "bounds", "size thresholds that force n bodies in convex position");
  c_bounds->add_option("-n", bounds_n, "target subfamily size")
      ->required()
      ->check(CLI::Range(3, 1000));
  c_bounds->add_option("-k", bounds_k, "ordered Ramsey clique size k")
      ->check(CLI::Range(1, 1000));
  c_bounds->add_option("-l", bounds_l, "ordered Ramsey clique size l")
      ->check(CLI::Range(1, 1000));

  CLI::App* c_gen = app.add_subcommand("gen", "generate or dump a family");
  c_gen->add_option("--spec", spec_path,
                    "JSON file with kind/count/seed/vertices fields");
  c_gen->add_option("--kind", kind_name_opt, "one of the generator kinds");
  c_gen->add_option("--count", opt_count)->check(CLI::Range(1, 64));
  c_gen->add_option("--seed", seed);
  c_gen->add_option("--vertices", opt_vertices)->check(CLI::Range(3, 12));
  c_gen->add_option("--fixture", fixture_name,
                    "dump a named fixture instead of generating");
  c_gen->add_option("--out", out_path, "write the family here instead of stdout");

  CLI::App* c_render = app.add_subcommand("render", "draw a family as SVG");
  c_render->add_option("file", file)->required();
  c_render->add_option("--out", out_path)->required();
  c_render->add_flag("--hull", draw_hull, "draw the joint hull and its word");
  c_render->add_flag("--transversal", draw_transversal,
                     "draw a transversal line when one exists");
  c_render->add_flag("--order", draw_order,
                     "label members with their boundary order");
  c_render
      ->add_option("--line", line_coeffs,
                   "draw the line a*x + b*y = c given as three integers")
      ->expected(3);

  std::vector<const char*> argv;
  argv.push_back("bodyorder");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidInput;
  }

  try {
    if (*c_check) {
      Family f = cli_detail::load_family(file);
      std::vector<Violation> vs = check_assumptions(f);
      nlohmann::json doc = result("check");
      doc["bodies"] = f.size();
      doc["clean"] = vs.empty();
      nlohmann::json arr = nlohmann::json::array();
      for (const Violation& v : vs) {
        nlohmann::json vj;
        vj["kind"] = v.kind == Violation::Kind::tangent_pair
                         ? "tangent-pair"
                         : "common-tangent-line";
        vj["members"] = cli_detail::id_list(f, v.members);
        if (v.line) vj["line"] = line_to_json(*v.line);
        arr.push_back(std::move(vj));
      }
      doc["violations"] = std::move(arr);
      bool healthy = vs.empty();
      try {
        bool nc = true;
        for (size_t i = 0; i < f.size() && nc; ++i)
          for (size_t j = i + 1; j < f.size() && nc; ++j)
            nc = is_noncrossing(f[i], f[j]);
        doc["noncrossing"] = nc;
        healthy = healthy && nc;
      } catch (const geometry_error&) {
        doc["noncrossing"] = nullptr;
        healthy = false;
      }
      try {
        bool gp = f.size() < 3 || is_general_position(f);
        doc["general_position"] = gp;
        healthy = healthy && gp;
      } catch (const geometry_error&) {
        doc["general_position"] = nullptr;
        healthy = false;
      }
      emit(out, doc);
      return healthy ? kExitOk : kExitPropertyFalse;
    }

    if (*c_orient) {
      Family f = cli_detail::load_family(file);
      int ia = cli_detail::find_body(f, triple_ids[0]);
      int ib = cli_detail::find_body(f, triple_ids[1]);
      int ic = cli_detail::find_body(f, triple_ids[2]);
      if (ia == ib || ib == ic || ia == ic)
        throw std::invalid_argument("orient: ids must name three bodies");
      OrientationSet s = orientations(f[ia], f[ib], f[ic]);
      nlohmann::json doc = result("orient");
      doc["triple"] = {f[ia].id, f[ib].id, f[ic].id};
      doc["orientations"] = cli_detail::orientation_to_json(s);
      emit(out, doc);
      return kExitOk;
    }

    if (*c_cp) {
      Family f = cli_detail::load_family(file);
      nlohmann::json doc = result("convex-position");
      bool verdict;
      if (exists_mode) {
        auto cert = exists_consistent_order(f);
        verdict = cert.has_value();
        doc["mode"] = "consistent-order";
        if (cert) {
          std::vector<int> o = cert->ordering;
          doc["ordering"] = cli_detail::id_list(f, o);
        }
      } else {
        verdict = in_convex_position_direct(f);
        doc["mode"] = "direct";
        if (verdict) doc["ordering"] = cli_detail::id_list(f, canonical_order(f));
      }
      doc["verdict"] = verdict;
      emit(out, doc);
      return verdict ? kExitOk : kExitPropertyFalse;
    }

    if (*c_order) {
      Family f = cli_detail::load_family(file);
      std::vector<int> o = canonical_order(f, convention == "+");
      nlohmann::json doc = result("order");
      doc["convention"] = convention;
      doc["ordering"] = cli_detail::id_list(f, o);
      emit(out, doc);
      return kExitOk;
    }

    if (*c_sub) {
      Family f = cli_detail::load_family(file);
      SubfamilyResult r = largest_convex_subfamily(f);
      nlohmann::json doc = result("subfamily");
      doc["members"] = cli_detail::id_list(f, r.members);
      doc["ordering"] = cli_detail::id_list(f, r.certificate.ordering);
      doc["size"] = r.members.size();
      emit(out, doc);
      return kExitOk;
    }

    if (*c_tr) {
      Family f = cli_detail::load_family(file);
      nlohmann::json doc = result("transversal");
      std::optional<TransversalCertificate> cert;
      int need = opt_min < 0 ? static_cast<int>(f.size()) : opt_min;
      if (need >= static_cast<int>(f.size())) {
        cert = has_transversal(f);
      } else {
        TransversalCertificate best = best_transversal(f);
        if (static_cast<int>(best.members.size()) >= need) cert = best;
      }
      doc["min"] = need;
      doc["verdict"] = cert.has_value();
      if (cert) doc["certificate"] = cli_detail::transversal_to_json(f, *cert);
      emit(out, doc);
      return cert ? kExitOk : kExitPropertyFalse;
    }

    if (*c_dich) {
      Family f = cli_detail::load_family(file);
      auto outcome = dichotomy(f, opt_t, opt_n);
      nlohmann::json doc = result("dichotomy");
      doc["t"] = opt_t;
      doc["n"] = opt_n;
      if (!outcome) {
        doc["outcome"] = "none";
        emit(out, doc);
        return kExitPropertyFalse;
      }
      if (outcome->transversal) {
        doc["outcome"] = "transversal";
        doc["certificate"] =
            cli_detail::transversal_to_json(f, *outcome->transversal);
      } else {
        doc["outcome"] = "convex-position";
        doc["certificate"] = {
            {"members", cli_detail::id_list(f, outcome->convex->members)},
            {"ordering",
             cli_detail::id_list(f, outcome->convex->certificate.ordering)}};
      }
      emit(out, doc);
      return kExitOk;
    }

    if (*c_chi) {
      Family f = cli_detail::load_family(file);
      Chirotope chi = chirotope(f);
      nlohmann::json doc = result("chirotope");
      doc["ground"] = chi.ground();
      nlohmann::json signs = nlohmann::json::array();
      for (const auto& [key, sign] : chi.sorted_signs())
        signs.push_back({{"triple",
                          {chi.ground()[key[0]], chi.ground()[key[1]],
                           chi.ground()[key[2]]}},
                         {"sign", sign}});
      doc["signs"] = std::move(signs);
      doc["exchange_condition"] = gp3_check(chi);
      emit(out, doc);
      return kExitOk;
    }

    if (*c_rep) {
      Family f = cli_detail::load_family(file);
      nlohmann::json doc = result("represent");
      if (!points_path.empty()) {
        PointsDocument pd = points_from_json(read_json_file(points_path));
        std::vector<int> b2p;
        if (pd.body_to_point)
          b2p = *pd.body_to_point;
        else
          for (size_t i = 0; i < pd.points.size(); ++i)
            b2p.push_back(static_cast<int>(i));
        bool ok = verify_representation(f, pd.points, b2p);
        doc["mode"] = "verify";
        doc["verdict"] = ok;
        emit(out, doc);
        return ok ? kExitOk : kExitPropertyFalse;
      }
      RepresentationSearchResult r = search_representation(f, budget, seed);
      doc["mode"] = "search";
      doc["found"] = r.certificate.has_value();
      doc["grid_exhausted"] = r.grid_exhausted;
      if (r.certificate) {
        PointsDocument pd{r.certificate->points, r.certificate->body_to_point};
        doc["certificate"] = points_to_json(pd);
        if (!out_path.empty())
          write_text_file(out_path, points_to_json(pd).dump(2) + "\n");
      }
      emit(out, doc);
      return r.certificate ? kExitOk : kExitPropertyFalse;
    }

    if (*c_bounds) {
      nlohmann::json doc = result("bounds");
      doc["n"] = bounds_n;
      doc["m_bound"] = mpz_to_json(bound_M(bounds_n));
      doc["pach_toth"] = mpz_to_json(bound_pach_toth(bounds_n));
      if (bounds_k > 0 || bounds_l > 0) {
        if (bounds_k < 1 || bounds_l < 1)
          throw std::invalid_argument("bounds: -k and -l go together");
        doc["ordered_ramsey"] = {
            {"k", bounds_k},
            {"l", bounds_l},
            {"vertices", mpz_to_json(bound_ordered_ramsey(bounds_k, bounds_l))}};
      }
      emit(out, doc);
      return kExitOk;
    }

    if (*c_gen) {
      Family f;
      if (!fixture_name.empty()) {
        if (!kind_name_opt.empty() || !spec_path.empty())
          throw std::invalid_argument("gen: use either --fixture or a kind");
        f = fixture(fixture_name);
      } else {
        GenSpec spec;
        spec.count = opt_count;
        spec.seed = seed;
        spec.vertices = opt_vertices;
        if (!spec_path.empty()) {
          nlohmann::json j = read_json_file(spec_path);
          if (!j.contains("kind") || !j["kind"].is_string())
            throw std::invalid_argument("gen: spec file needs a kind field");
          kind_name_opt = j["kind"].get<std::string>();
          if (j.contains("count")) spec.count = j["count"].get<int>();
          if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
          if (j.contains("vertices"))
            spec.vertices = j["vertices"].get<int>();
        }
        if (kind_name_opt.empty())
          throw std::invalid_argument(
              "gen: --kind, --spec, or --fixture is required");
        auto k = kind_from_name(kind_name_opt);
        if (!k)
          throw std::invalid_argument("gen: unknown kind '" + kind_name_opt +
                                      "'");
        spec.kind = *k;
        f = generate(spec);
      }
      std::string text = family_to_json(f).dump(2) + "\n";
      if (out_path.empty())
        out << text;
      else {
        write_text_file(out_path, text);
        nlohmann::json doc = result("gen");
        doc["out"] = out_path;
        doc["bodies"] = f.size();
        emit(out, doc);
      }
      return kExitOk;
    }

    if (*c_render) {
      Family f = cli_detail::load_family(file);
      RenderOptions opt;
      opt.hull = draw_hull;
      if (draw_hull) {
        try {
          LabeledHull h = hull_of_bodies(f);
          std::string word = "word:";
          for (int w : h.word) word += " " + f[w].id;
          opt.captions.push_back(word);
        } catch (const tangency_error& e) {
          opt.captions.push_back(std::string("word undefined: ") + e.what());
        }
      }
      if (draw_transversal) {
        auto cert = has_transversal(f);
        if (cert) {
          opt.line = cert->line;
          opt.captions.push_back("transversal: " + cert->line.str());
        } else {
          opt.captions.push_back("no transversal");
        }
      }
      if (!line_coeffs.empty()) {
        if (line_coeffs[0] == 0 && line_coeffs[1] == 0)
          throw std::invalid_argument("render: --line needs a nonzero normal");
        Line l{mpz_class(line_coeffs[0]), mpz_class(line_coeffs[1]),
               mpz_class(line_coeffs[2])};
        opt.line = l;
        opt.captions.push_back("line: " + l.str());
      }
      if (draw_order) {
        std::vector<int> o = canonical_order(f);
        for (size_t pos = 0; pos < o.size(); ++pos)
          opt.badges.push_back(
              {o[pos], "(#" + std::to_string(pos + 1) + ")"});
      }
      write_text_file(out_path, render_svg(f, opt));
      nlohmann::json doc = result("render");
      doc["out"] = out_path;
      emit(out, doc);
      return kExitOk;
    }
  } catch (const size_limit_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitSizeLimit;
  } catch (const geometry_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  err << "error: no subcommand\n";
  return kExitInvalidInput;
}

inline int run(int argc, const char* const* argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(std::move(args), std::cout, std::cerr);
}

}  // namespace bodyorder
