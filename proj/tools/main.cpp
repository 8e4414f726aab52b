#include "taycheck/cli.hpp"

int main(int argc, char** argv) { return taycheck::run_cli(argc, argv); }
