#include <fanforge/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::ios::sync_with_stdio(false);
    return fanforge::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
