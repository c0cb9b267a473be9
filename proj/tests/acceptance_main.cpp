#include <iostream>

#include "bollobas/acceptance.hpp"

int main() {
    return bollobas::acceptance::run_all(std::cout) ? 0 : 1;
}
