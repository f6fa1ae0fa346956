#include "halflog/cli.hpp"

int main(int argc, char** argv) { return halflog::cli::run(argc, argv); }
