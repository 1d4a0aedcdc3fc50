#include "qlur/analysis.hpp"

int main(int argc, char** argv) { return qlur::run_cli(argc, argv); }
