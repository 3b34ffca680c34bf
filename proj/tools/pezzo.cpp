#include "pezzo/cli.hpp"

int main(int argc, char** argv) { return pezzo::cli::run(argc, argv); }
