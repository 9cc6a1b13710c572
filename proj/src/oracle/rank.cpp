#include "sev/errors.hpp"
#include "sev/oracle.hpp"

namespace sev::oracle {

long rank_mod_p(const std::vector<Vec>& rows, std::size_t cols, const PrimeField& field,
                const simd::KernelSet& k) {
    const std::size_t nrows = rows.size();
    if (nrows == 0 || cols == 0) return 0;
    const auto mod = simd::Modulus::make(field.p);
    std::vector<std::uint32_t> a(nrows * cols);
    for (std::size_t r = 0; r < nrows; ++r) {
        if (rows[r].size() != cols) throw DomainError("row length does not match column count");
        for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = rows[r][c] % field.p;
    }

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < nrows; ++c) {
        std::size_t piv = rank;
        while (piv < nrows && a[piv * cols + c] == 0) ++piv;
        if (piv == nrows) continue;
        std::uint32_t* prow = &a[rank * cols];
        if (piv != rank) std::swap_ranges(prow, prow + cols, &a[piv * cols]);
        k.scale(prow + c, field.inv(prow[c]), cols - c, mod);
        for (std::size_t r = rank + 1; r < nrows; ++r) {
            std::uint32_t* row = &a[r * cols];
            if (row[c]) k.submul(row + c, prow + c, row[c], cols - c, mod);
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

}  // namespace sev::oracle
