#include "weilcensus/cli.hpp"

int main(int argc, char** argv) { return weilcensus::cli_main(argc, argv); }
