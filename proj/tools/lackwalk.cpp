#include "lackwalk/cli.hpp"

int main(int argc, char** argv)
{
    return lackwalk::cli::run_main(std::vector<std::string>(argv + 1, argv + argc));
}
