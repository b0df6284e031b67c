#include "pwmkit/cli.hpp"

int main(int argc, char** argv) { return pwmkit::cli::run(argc, argv); }
