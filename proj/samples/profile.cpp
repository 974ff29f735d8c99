// Prints mu_k and tau_k of a weighted homogeneous polynomial next to the
// closed forms, then checks the Milnor algebra series.
//
//   ./profile "x^2*y + y^3" 6

#include <iostream>

#include <ktjurina/ktjurina.hpp>

int main(int argc, char** argv) {
    using namespace ktjurina;
    const std::string text = argc > 1 ? argv[1] : "x^3 + y^3 + z^3";
    const unsigned kmax = argc > 2 ? static_cast<unsigned>(std::stoul(argv[2])) : 5;

    try {
        const auto f = parse_polynomial(text);
        const auto inferred = infer_weights(f);
        if (!inferred) {
            std::cerr << inferred.reason << '\n';
            return 1;
        }
        const auto& ws = *inferred.weights;
        const ClosedFormContext ctx(f, ws);
        std::cout << f.to_string() << "  weights " << ws.to_string() << "  mu0 = " << ctx.mu0 << '\n';

        for (unsigned k = 0; k <= kmax; ++k) {
            std::cout << "k=" << k << "  mu=" << mu_oracle(f, ws, k) << "  tau=" << tau_oracle(f, ws, k);
            if (k <= ctx.mult.m0) std::cout << "  (closed form " << theorem_b_mu(ctx, k) << ", " << theorem_b_tau(ctx, k) << ')';
            std::cout << '\n';
        }

        const auto series = hilbert_from_euler(f, ws);
        std::cout << "O/J(f): " << series.to_string() << " = " << hilbert_polynomial(series).to_string() << '\n';
    } catch (const error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    }
}
