#include "sortnet/cli.hpp"

int main(int argc, char** argv) { return sortnet::run_cli(argc, argv); }
