#include "lingo/cli.hpp"

int main(int argc, char** argv) { return lingo::cli_main(argc, argv); }
