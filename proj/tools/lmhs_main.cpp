#include "lmhs/cli.hpp"

int main(int argc, char** argv) { return lmhs::cli::main_entry(argc, argv); }
