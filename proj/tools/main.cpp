#include "graybin/cli.hpp"

int main(int argc, char** argv) { return graybin::cli::main_entry(argc, argv); }
