#include "qkseidel/cli.hpp"

int main(int argc, char** argv) { return qkseidel::cli::main(argc, argv); }
