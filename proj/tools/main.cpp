#include "cli.hpp"

int main(int argc, char** argv) { return burnside::cli::dispatch(argc, argv); }
