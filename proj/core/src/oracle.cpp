#include "syzlab/oracle.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "syzlab/error.hpp"

namespace syzlab {

Gf2RowSpace::Gf2RowSpace(std::size_t width)
    : width_(width), pivot_row_of_column_(width, -1) {}

void Gf2RowSpace::reduce(std::vector<std::uint64_t>& row) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (test(row, pivots_[r])) {
      const auto& pr = rows_[r];
      for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= pr[w];
    }
  }
}

bool Gf2RowSpace::insert(std::vector<std::uint64_t> row) {
  reduce(row);
  std::size_t pivot = width_;
  for (std::size_t w = 0; w < row.size(); ++w) {
    if (row[w]) {
      pivot = w * 64 + static_cast<std::size_t>(__builtin_ctzll(row[w]));
      break;
    }
  }
  if (pivot >= width_) return false;
  // Keep the echelon form fully reduced: clear the new pivot from old rows.
  for (auto& existing : rows_) {
    if (test(existing, pivot)) {
      for (std::size_t w = 0; w < row.size(); ++w) existing[w] ^= row[w];
    }
  }
  pivot_row_of_column_[pivot] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

bool Gf2RowSpace::contains(std::vector<std::uint64_t> row) const {
  reduce(row);
  return std::all_of(row.begin(), row.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> Gf2RowSpace::free_columns() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < width_; ++c) {
    if (pivot_row_of_column_[c] < 0) out.push_back(c);
  }
  return out;
}

std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t width) {
  std::size_t rank = 0;
  const std::size_t words = (width + 63) / 64;
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = 1ULL << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][w] & bit) {
        for (std::size_t k = w; k < words; ++k) rows[r][k] ^= rows[rank][k];
      }
    }
    ++rank;
  }
  return rank;
}

DegreePiece::DegreePiece(const FreeModule& F, int degree) : degree_(degree) {
  for (std::size_t c = 0; c < F.rank(); ++c) {
    for (const auto& m : monomials_of_degree(*F.ring(), degree - F.twist(c))) {
      terms_.push_back(Term{m, static_cast<std::uint32_t>(c)});
    }
  }
  index_.reserve(terms_.size() * 2);
  for (std::size_t k = 0; k < terms_.size(); ++k) index_.emplace(terms_[k], k);
}

std::optional<std::size_t> DegreePiece::index_of(const Term& t) const {
  auto it = index_.find(t);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::uint64_t> DegreePiece::bits(const ModuleElement& e) const {
  return bits(e, Monomial{});
}

std::vector<std::uint64_t> DegreePiece::bits(const ModuleElement& e, const Monomial& m) const {
  std::vector<std::uint64_t> row((terms_.size() + 63) / 64, 0);
  for (std::size_t c = 0; c < e.size(); ++c) {
    for (const auto& mono : e[c].terms()) {
      Term t{mono * m, static_cast<std::uint32_t>(c)};
      auto idx = index_of(t);
      if (idx) Gf2RowSpace::flip(row, *idx);
    }
  }
  return row;
}

namespace oracle {

namespace {

void require_homogeneous(const FreeModule& F, std::span<const ModuleElement> gens) {
  for (const auto& g : gens) {
    g.check_in(F, "oracle");
    if (!g.is_zero() && !g.degree(F)) throw InvalidArgument("oracle: generator not homogeneous");
  }
}

}  // namespace

Gf2RowSpace submodule_piece(const FreeModule& F, std::span<const ModuleElement> gens, int degree) {
  require_homogeneous(F, gens);
  DegreePiece piece(F, degree);
  Gf2RowSpace space(piece.size());
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    int dg = *g.degree(F);
    if (dg > degree) continue;
    for (const auto& m : monomials_of_degree(*F.ring(), degree - dg)) {
      space.insert(piece.bits(g, m));
      if (space.dimension() == piece.size()) return space;
    }
  }
  return space;
}

std::size_t submodule_dimension(const FreeModule& F, std::span<const ModuleElement> gens,
                                int degree) {
  return submodule_piece(F, gens, degree).dimension();
}

bool contains(const FreeModule& F, std::span<const ModuleElement> gens, const ModuleElement& v) {
  v.check_in(F, "oracle::contains");
  if (v.is_zero()) return true;
  auto d = v.degree(F);
  if (!d) throw InvalidArgument("oracle::contains: element not homogeneous");
  auto space = submodule_piece(F, gens, *d);
  DegreePiece piece(F, *d);
  return space.contains(piece.bits(v));
}

std::size_t quotient_dimension(const FreeModule& F, std::span<const ModuleElement> gens,
                               int degree) {
  DegreePiece piece(F, degree);
  return piece.size() - submodule_dimension(F, gens, degree);
}

std::size_t map_rank(const FreeModule& source, const FreeModule& target,
                     std::span<const ModuleElement> columns, int degree) {
  if (columns.size() != source.rank()) throw RingMismatch("oracle::map_rank: column count");
  DegreePiece tp(target, degree);
  std::vector<std::vector<std::uint64_t>> rows;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    columns[j].check_in(target, "oracle::map_rank");
    if (columns[j].is_zero()) continue;
    for (const auto& m : monomials_of_degree(*source.ring(), degree - source.twist(j))) {
      rows.push_back(tp.bits(columns[j], m));
    }
  }
  return gf2_rank(std::move(rows), tp.size());
}

namespace {

struct QuotientPiece {
  DegreePiece piece;
  Gf2RowSpace space;
  std::vector<std::size_t> free;
  std::vector<std::int64_t> position;  // column -> quotient coordinate or -1

  QuotientPiece(const FreeModule& F, std::span<const ModuleElement> rels, int degree)
      : piece(F, degree), space(submodule_piece(F, rels, degree)), free(space.free_columns()),
        position(piece.size(), -1) {
    for (std::size_t k = 0; k < free.size(); ++k) position[free[k]] = static_cast<std::int64_t>(k);
  }

  std::size_t dimension() const { return free.size(); }
};

}  // namespace

std::vector<std::size_t> koszul_betti(const FreeModule& F, std::span<const ModuleElement> relations,
                                      int degree) {
  require_homogeneous(F, relations);
  const GradedRing& ring = *F.ring();
  const std::size_t n = ring.num_variables();
  std::map<int, std::unique_ptr<QuotientPiece>> pieces;
  auto get = [&](int e) -> const QuotientPiece& {
    auto it = pieces.find(e);
    if (it == pieces.end()) {
      it = pieces.emplace(e, std::make_unique<QuotientPiece>(F, relations, e)).first;
    }
    return *it->second;
  };

  const std::uint32_t subsets = 1U << n;
  auto subset_degree = [&](std::uint32_t s) {
    int d = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (s & (1U << v)) d += ring.degree(v);
    }
    return d;
  };

  // Offsets of each summand M_{degree - deg x_S}·e_S inside K_i.
  std::vector<std::vector<std::pair<std::uint32_t, std::size_t>>> blocks(n + 1);
  std::vector<std::size_t> dims(n + 1, 0);
  for (std::uint32_t s = 0; s < subsets; ++s) {
    auto i = static_cast<std::size_t>(__builtin_popcount(s));
    blocks[i].push_back({s, dims[i]});
    dims[i] += get(degree - subset_degree(s)).dimension();
  }
  auto offset_of = [&](std::size_t i, std::uint32_t s) {
    for (const auto& [set, off] : blocks[i]) {
      if (set == s) return off;
    }
    throw InternalError("koszul_betti: missing block");
  };

  // rank of ∂_i : K_i -> K_{i-1}
  std::vector<std::size_t> ranks(n + 2, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::vector<std::uint64_t>> rows;
    const std::size_t width = dims[i - 1];
    for (const auto& [s, off] : blocks[i]) {
      const QuotientPiece& src = get(degree - subset_degree(s));
      for (std::size_t q = 0; q < src.dimension(); ++q) {
        std::vector<std::uint64_t> row((width + 63) / 64, 0);
        const Term base = src.piece.terms()[src.free[q]];
        for (std::size_t v = 0; v < n; ++v) {
          if (!(s & (1U << v))) continue;
          const std::uint32_t t = s & ~(1U << v);
          const QuotientPiece& dst = get(degree - subset_degree(t));
          Term moved{base.mono * Monomial::variable(ring, v), base.comp};
          auto idx = dst.piece.index_of(moved);
          if (!idx) throw InternalError("koszul_betti: term outside degree piece");
          auto vecbits = dst.space.zero_row();
          Gf2RowSpace::flip(vecbits, *idx);
          dst.space.reduce(vecbits);
          const std::size_t toff = offset_of(i - 1, t);
          for (std::size_t k = 0; k < dst.free.size(); ++k) {
            if (Gf2RowSpace::test(vecbits, dst.free[k])) Gf2RowSpace::flip(row, toff + k);
          }
        }
        rows.push_back(std::move(row));
      }
    }
    ranks[i] = gf2_rank(std::move(rows), width);
  }
  std::vector<std::size_t> betti(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) betti[i] = dims[i] - ranks[i] - ranks[i + 1];
  return betti;
}

}  // namespace oracle

}  // namespace syzlab
