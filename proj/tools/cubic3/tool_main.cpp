#include "commands.hpp"

int main(int argc, char** argv) { return cubic3::cli::run(argc, argv); }
