// Printed tables of component dimensions, stored verbatim.
#include "hilbdim/hilbert_dim.hpp"

#include <vector>

namespace hilbdim {

namespace {

TableRow p2_row(std::string label, long long d, long long g, long long n, long long e1, long long e2,
                long long a, long long dim, bool known = true) {
  TableRow r;
  r.source = known ? TableSource::scroll_p2 : TableSource::scroll_p2_open;
  r.label = std::move(label);
  r.descriptor = {Family::scroll_p2, d, g, n, ScrollP2Preset{e1, e2}, 0};
  r.splitting = ScrollP2Splitting{a};
  r.printed_dim = dim;
  r.existence_known = known;
  return r;
}

TableRow q_row(std::string label, long long d, long long g, long long n, long long e2, long long dim) {
  TableRow r;
  r.source = TableSource::scroll_q;
  r.label = std::move(label);
  r.descriptor = {Family::scroll_q, d, g, n, ScrollQPreset{3, 3, e2}, 0};
  // O(2) + O(1) on every line of both rulings.
  r.splitting = ScrollQSplitting{2, 2};
  r.printed_dim = dim;
  return r;
}

TableRow fib_row(Family family, std::string label, long long d, long long g, long long n,
                 long long pg, long long b, long long dim, A1Hint hint = A1Hint::none) {
  TableRow r;
  r.source = family == Family::hqf ? TableSource::hqf : TableSource::del_pezzo3;
  r.label = std::move(label);
  r.descriptor = {family, d, g, n, FibrationParams{b, std::nullopt}, pg};
  r.splitting = FibrationSplitting{hint, std::nullopt};
  r.printed_dim = dim;
  return r;
}

std::vector<TableRow> make_rows() {
  std::vector<TableRow> rows;
  // Scrolls over P^2; c1(E) = 4 has generic type O(2)+O(2) or O(3)+O(1), c1(E) = 5 has O(3)+O(2).
  rows.push_back(p2_row("p2-1", 7, 3, 6, 4, 9, 2, 57));
  rows.push_back(p2_row("p2-2", 8, 3, 7, 4, 8, 2, 68));
  rows.push_back(p2_row("p2-3", 9, 3, 8, 4, 7, 2, 81));
  rows.push_back(p2_row("p2-4", 10, 3, 9, 4, 6, 2, 96));
  rows.push_back(p2_row("p2-5", 10, 6, 6, 5, 15, 3, 72));
  rows.push_back(p2_row("p2-6", 12, 3, 11, 4, 4, 2, 132));
  rows.push_back(p2_row("p2-open-1", 11, 3, 10, 4, 5, 2, 113, false));
  rows.push_back(p2_row("p2-open-2", 11, 6, 7, 5, 14, 3, 83, false));

  rows.push_back(q_row("q-1", 8, 4, 6, 10, 61));
  rows.push_back(q_row("q-2", 9, 4, 7, 9, 72));
  rows.push_back(q_row("q-3", 10, 4, 8, 8, 85));
  rows.push_back(q_row("q-4", 11, 4, 9, 7, 100));

  const Family H = Family::hqf;
  const A1Hint cited = A1Hint::cited_a1_equals_one;
  rows.push_back(fib_row(H, "hqf-1", 7, 3, 6, 0, 1, 64));
  rows.push_back(fib_row(H, "hqf-2", 8, 3, 7, 0, 0, 74));
  rows.push_back(fib_row(H, "hqf-3", 9, 3, 8, 0, -1, 86));
  rows.push_back(fib_row(H, "hqf-4", 9, 4, 7, 0, 1, 84));
  rows.push_back(fib_row(H, "hqf-5", 10, 3, 9, 0, -2, 100, cited));
  rows.push_back(fib_row(H, "hqf-6", 10, 4, 8, 0, 0, 96));
  rows.push_back(fib_row(H, "hqf-7", 10, 5, 7, 0, 2, 94));
  rows.push_back(fib_row(H, "hqf-8", 11, 3, 10, 0, -3, 116, cited));
  rows.push_back(fib_row(H, "hqf-9", 11, 4, 9, 0, -1, 110));
  rows.push_back(fib_row(H, "hqf-10", 11, 5, 8, 0, 1, 106));
  rows.push_back(fib_row(H, "hqf-11", 11, 6, 7, 0, 3, 104));

  const Family D = Family::del_pezzo3;
  rows.push_back(fib_row(D, "dp3-1", 9, 7, 6, 2, 0, 94));
  rows.push_back(fib_row(D, "dp3-2", 10, 9, 6, 3, 1, 114));
  rows.push_back(fib_row(D, "dp3-3", 11, 8, 7, 2, -1, 104));
  return rows;
}

}  // namespace

std::span<const TableRow> builtin_table_rows() {
  static const std::vector<TableRow> rows = make_rows();
  return rows;
}

}  // namespace hilbdim
