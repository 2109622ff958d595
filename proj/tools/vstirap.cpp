#include "vstirap/cli.hpp"

int main(int argc, char** argv) { return vstirap::run_cli(argc, argv); }
