#include "cli.hpp"

int main(int argc, char** argv) { return sepaths::cli::run(argc, argv); }
