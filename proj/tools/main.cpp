#include "cli.hpp"

int main(int argc, char** argv) { return gravotto::cli::run(argc, argv); }
