#include <floercone/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return floercone::cli::run(args, std::cout, std::cerr);
}
