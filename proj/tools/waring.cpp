#include <waring/cli.hpp>

int main(int argc, char** argv) { return waring::cli::run_cli(argc, argv); }
