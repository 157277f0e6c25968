#include "ribbon/acceptance.hpp"

int main() {
    auto results = ribbon::run_acceptance(2, false);
    ribbon::print_acceptance(results);
    return ribbon::all_passed(results) ? 0 : 1;
}
