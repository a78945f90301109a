#include "gemex/cli.hpp"

int main(int argc, char** argv) { return gemex::run_cli(argc, argv); }
