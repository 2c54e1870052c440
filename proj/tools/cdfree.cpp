#include <cdfree/cli.hpp>

int main(int argc, char** argv) { return cdfree::cli::run(argc, argv); }
