// Minimal library tour: run one deceptive-landscape search under random and
// fitness-uniform deletion and compare how long each takes to hit the
// optimum. See configs/ for the full experiment-grid front end.

#include <iostream>

#include "fuds/fuds.hpp"

int main() {
    const fuds::problems::Deceptive2D problem(0.2, 0.3, 0.1);

    fuds::RunParams params;
    params.capacity = 500;
    params.initial_size = 10;
    params.stop.target_fitness = 4.0;
    params.stop.max_generations = 2000;
    params.seed = 7;

    for (const auto deletion : {fuds::Deletion::random, fuds::Deletion::fuds}) {
        fuds::SchemeConfig scheme{fuds::Selection::tournament(2), deletion, 0.25, 0.5};
        const auto result = fuds::run(problem, scheme, params);
        std::cout << scheme.name() << ": best fitness " << result.best_fitness << " after "
                  << result.trace.generations() << " generations ("
                  << fuds::to_string(result.trace.stop_reason) << ")\n";
    }
    return 0;
}
