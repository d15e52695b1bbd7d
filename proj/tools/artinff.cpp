#include "artinff/cli.hpp"

int main(int argc, char** argv) { return artinff::cli::run(argc, argv); }
