#include "bodyorder/cli.hpp"

int main(int argc, char** argv) { return bodyorder::run(argc, argv); }
