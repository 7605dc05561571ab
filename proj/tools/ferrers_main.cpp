#include "ferrers/cli.hpp"

int main(int argc, char** argv) {
    return ferrers::cli::run(argc, argv);
}
