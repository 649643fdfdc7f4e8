#include "sixcircles/cli.hpp"

int main(int argc, char** argv) { return sixcircles::run_cli(argc, argv); }
