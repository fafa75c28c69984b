#include "dra/cli.hpp"

int main(int argc, char** argv) {
    return dra::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
