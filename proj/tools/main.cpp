#include "prsequiv/cli.hpp"

int main(int argc, char** argv) { return prsequiv::cli_main(argc, argv); }
