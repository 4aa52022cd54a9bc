#include "crossout/correspondence.hpp"

#include <algorithm>

#include "crossout/errors.hpp"
#include "crossout/order_statistics.hpp"

namespace crossout {

Parity parity_from_string(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  throw ValidationError("parity must be \"even\" or \"odd\", got \"" + s + "\"");
}

int CrossoutTuple::permutation_size() const {
  return parity == Parity::Even ? pa.length() : pa.length() - 1;
}

namespace {

void check_labels(const std::vector<int>& labels, const std::vector<int>& bounds,
                  const char* name, const char* bound_name) {
  if (labels.size() != bounds.size())
    throw ValidationError(std::string(name) + " must have " + std::to_string(bounds.size()) +
                          " entries, got " + std::to_string(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 1 || labels[i] > bounds[i])
      throw ConstraintViolation(std::string(name) + "_" + std::to_string(i + 1) + " = " +
                                    std::to_string(labels[i]) + " exceeds " + bound_name +
                                    "_" + std::to_string(i + 1) + " = " +
                                    std::to_string(bounds[i]),
                                static_cast<int>(i) + 1);
  }
}

// Labels of each path, indexed by down-step order. For the even case the
// unlabeled final down step of p_B is dropped; for the odd case the final
// down step of p_A.
std::vector<int> first_n(std::vector<int> v, std::size_t n) {
  v.resize(n);
  return v;
}

}  // namespace

void CrossoutTuple::validate() const {
  if (pa.length() == 0) throw ValidationError("p_A must be non-empty");
  const int n = pa.semilength();
  if (parity == Parity::Even) {
    if (pb.length() != 2 * n + 2)
      throw ValidationError("p_B must have length " + std::to_string(2 * n + 2));
    if (!pb.is_down(pb.length()))
      throw ValidationError("p_B must end with a down step");
    const Heights ha = pa.heights();
    const Heights hb = pb.heights();
    check_labels(ell, ha.h, "ell", "h");
    check_labels(em, first_n(hb.h_star, n), "m", "h*");
  } else {
    if (pb.length() != 2 * n)
      throw ValidationError("p_B must have length " + std::to_string(2 * n));
    if (!pa.is_down(pa.length()))
      throw ValidationError("p_A must end with a down step");
    const Heights ha = pa.heights();
    const Heights hb = pb.heights();
    check_labels(ell, first_n(ha.h_star, n - 1), "ell", "h*");
    check_labels(em, hb.h, "m", "h");
  }
}

DyckPath alice_path(const Permutation& w, const Marking& marking) {
  const int size = w.size();
  const int len = size % 2 == 0 ? size : size + 1;
  std::vector<int> down;
  for (int pos = 1; pos <= size; ++pos)
    if (marking.at(pos) == Mark::A) down.push_back(w.at(pos));
  if (size % 2 != 0) down.push_back(len);
  return DyckPath::from_down_steps(len, down);
}

DyckPath bob_path(const Permutation& w, const Marking& marking) {
  const int size = w.size();
  const int len = size % 2 == 0 ? size + 2 : size + 1;
  std::vector<int> down;
  for (int pos = 1; pos <= size; ++pos)
    if (marking.at(pos) == Mark::B) down.push_back(pos + 1);
  if (size % 2 == 0) down.push_back(len);
  return DyckPath::from_down_steps(len, down);
}

CrossoutTuple encode(const Permutation& w) {
  const int size = w.size();
  const Marking marking = crossout_mark(w);
  const std::vector<int> a_pos = marking.positions(Mark::A);  // a_1 < ... < a_k
  std::vector<int> b_pos = marking.positions(Mark::B);
  std::sort(b_pos.begin(), b_pos.end(),
            [&](int x, int y) { return w.at(x) < w.at(y); });  // w(b_1) < ... < w(b_n)

  CrossoutTuple t;
  t.parity = size % 2 == 0 ? Parity::Even : Parity::Odd;
  t.pa = alice_path(w, marking);
  t.pb = bob_path(w, marking);

  std::vector<int> a_values;
  for (int a : a_pos) a_values.push_back(w.at(a));

  // ell_{J(i)} = 1 + #{j < i : w(a_j) > w(a_i)}, J(i) = rank of w(a_i).
  std::vector<int> sorted_a = a_values;
  std::sort(sorted_a.begin(), sorted_a.end());
  t.ell.assign(a_pos.size(), 0);
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    int label = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (a_values[j] > a_values[i]) ++label;
    const auto rank = std::lower_bound(sorted_a.begin(), sorted_a.end(), a_values[i]) -
                      sorted_a.begin();
    t.ell[rank] = label;
  }

  // m_{K(i)} = 1 + #{j < i : b_j > b_i}, K(i) = rank of position b_i.
  std::vector<int> sorted_b = b_pos;
  std::sort(sorted_b.begin(), sorted_b.end());
  t.em.assign(b_pos.size(), 0);
  for (std::size_t i = 0; i < b_pos.size(); ++i) {
    int label = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (b_pos[j] > b_pos[i]) ++label;
    const auto rank =
        std::lower_bound(sorted_b.begin(), sorted_b.end(), b_pos[i]) - sorted_b.begin();
    t.em[rank] = label;
  }
  return t;
}

Permutation decode(const CrossoutTuple& t) {
  t.validate();
  const int size = t.permutation_size();
  std::vector<int> boxes(size, 0);
  std::vector<bool> is_b(size + 1, false);
  const int b_last = t.pb.length();
  for (int d : t.pb.down_steps()) {
    if (t.parity == Parity::Even && d == b_last) continue;
    is_b[d - 1] = true;
  }

  OrderStatisticSet empty_a(size);
  std::vector<int> b_boxes;
  for (int pos = 1; pos <= size; ++pos) {
    if (is_b[pos])
      b_boxes.push_back(pos);
    else
      empty_a.insert(pos);
  }

  std::vector<int> a_values = t.pa.down_steps();
  if (t.parity == Parity::Odd) a_values.pop_back();
  if (a_values.size() != static_cast<std::size_t>(empty_a.size()) ||
      b_boxes.size() != t.em.size())
    throw ValidationError("path pair does not split the boxes consistently");

  std::vector<bool> used(size + 1, false);
  for (std::size_t i = 0; i < a_values.size(); ++i) {
    const int label = t.ell[i];
    if (label > empty_a.size())
      throw ConstraintViolation("ell_" + std::to_string(i + 1) + " exceeds empty A boxes",
                                static_cast<int>(i) + 1);
    const int box = empty_a.select(label);
    empty_a.erase(box);
    boxes[box - 1] = a_values[i];
    used[a_values[i]] = true;
  }

  OrderStatisticSet remaining(size);
  for (int v = 1; v <= size; ++v)
    if (!used[v]) remaining.insert(v);
  for (std::size_t i = 0; i < b_boxes.size(); ++i) {
    const int label = t.em[i];
    if (label > remaining.size())
      throw ConstraintViolation("m_" + std::to_string(i + 1) + " exceeds remaining values",
                                static_cast<int>(i) + 1);
    const int v = remaining.select(label);
    remaining.erase(v);
    boxes[b_boxes[i] - 1] = v;
  }
  return Permutation(std::move(boxes));
}

}  // namespace crossout
