// Writes the Cayley table of a builder spec to a file, for exercising the
// table: front end against independently generated input.
#include <iostream>
#include <string>

#include "cosetcodes/errors.hpp"
#include "cosetcodes/group_spec.hpp"
#include "cosetcodes/table_io.hpp"

int main(int argc, char** argv) {
    bool with_labels = true;
    int arg = 1;
    if (arg < argc && std::string(argv[arg]) == "--no-labels") {
        with_labels = false;
        ++arg;
    }
    if (argc - arg != 2) {
        std::cerr << "usage: make_table [--no-labels] SPEC OUTFILE\n";
        return 1;
    }
    try {
        cosetcodes::BuiltGroup built =
            cosetcodes::build_group(cosetcodes::parse_group_spec(argv[arg]));
        cosetcodes::write_cayley_table(built.group, argv[arg + 1], with_labels);
        std::cout << "wrote order-" << built.group.order() << " table to " << argv[arg + 1]
                  << "\n";
    } catch (const cosetcodes::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
