#include "lieinv/extension.hpp"

#include "lieinv/errors.hpp"

namespace lieinv {

ExtendedAlgebra extend(const LieAlgebra& L, const Representation& T) {
    const ValidationReport report = check_representation(L, T);
    if (!report.ok()) throw Error(ErrorKind::Validation, "representation invalid: " + report.violations.front());
    const std::size_t n = L.dim();
    const std::size_t m = T.dim();
    std::vector<std::string> labels = L.labels();
    for (std::size_t a = 0; a < m; ++a) labels.push_back("e" + std::to_string(n + a + 1));
    ExtendedAlgebra ext{LieAlgebra(n + m, labels), n, m};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t k = 0; k < n; ++k)
                if (!L.constant(a, b, k).is_zero()) ext.result.set_constant(a, b, k, L.constant(a, b, k));
    for (std::size_t A = 0; A < n; ++A)
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (!T.matrix(A)(a, b).is_zero()) ext.result.set_constant(A, n + a, n + b, -T.matrix(A)(a, b));
    return ext;
}

}  // namespace lieinv
