#include "cli.hpp"

int main(int argc, char** argv) { return hiker::cli::run(argc, argv); }
