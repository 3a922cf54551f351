#include "normtop/cli.hpp"

int main(int argc, char** argv) {
    return normtop::run_cli(argc, argv);
}
