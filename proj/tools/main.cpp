#include <string>
#include <vector>

#include "zenith/cli.hpp"

int main(int argc, char** argv) {
    return zenith::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
