#ifndef PERIWAVE_SYMBOL_HPP
#define PERIWAVE_SYMBOL_HPP

#include <cmath>

namespace periwave {

// Fourier multiplier alpha(m) of the dispersion operator M, acting on the
// integer mode index m of an L-periodic function.
struct SymbolSpec {
    enum class Kind { neg_second_derivative, ilw };

    Kind kind = Kind::neg_second_derivative;
    double delta = 1.0; // ILW depth parameter, > 0
    double gamma = 0.0; // lower bound of alpha
    double s1 = 2.0, s2 = 2.0;

    static SymbolSpec second_derivative() { return {}; }

    static SymbolSpec ilw_symbol(double delta) {
        SymbolSpec s;
        s.kind = Kind::ilw;
        s.delta = delta;
        s.s1 = s.s2 = 1.0;
        return s;
    }

    double multiplier(long m, double L) const {
        if (m == 0) return 0.0;
        double xi = 2.0 * 3.14159265358979323846 * static_cast<double>(m) / L;
        if (kind == Kind::neg_second_derivative) return xi * xi;
        return xi / std::tanh(xi * delta) - 1.0 / delta;
    }
};

} // namespace periwave

#endif
