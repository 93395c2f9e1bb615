#include <iostream>

#include <protex/cli/app.hpp>

int main(int argc, char** argv) {
    return protex::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
