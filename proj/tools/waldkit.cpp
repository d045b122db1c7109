#include <iostream>

#include "waldkit/cli.hpp"

int main(int argc, char** argv) {
#ifdef WALDKIT_DATA_DIR
    waldkit::set_data_dir(WALDKIT_DATA_DIR);
#endif
    return waldkit::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
