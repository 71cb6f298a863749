#include "peakfn/insertion.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace peakfn {

std::string format_event(const BumpEvent& e) {
  std::ostringstream os;
  switch (e.kind) {
    case BumpEvent::Kind::row_bump:
      os << "row-bump " << e.bumped << "←" << e.inserted;
      break;
    case BumpEvent::Kind::col_bump:
      os << "col-bump " << e.bumped << "←" << e.inserted;
      break;
    case BumpEvent::Kind::place:
      os << "place " << e.inserted;
      break;
  }
  os << " @(" << e.row << "," << e.col << ")";
  return os.str();
}

namespace {

void log(Trace* trace, BumpEvent::Kind kind, int bumped, int inserted, std::size_t row,
         std::size_t col) {
  if (trace)
    trace->push_back({kind, bumped, inserted, static_cast<int>(row) + 1, static_cast<int>(col) + 1});
}

}  // namespace

RskResult rsk(const Permutation& p, Trace* trace) {
  Rows ins;
  Rows rec;
  for (int i = 1; i <= p.size(); ++i) {
    int x = p.at(i);
    std::size_t r = 0;
    for (;; ++r) {
      if (r == ins.size()) {
        ins.emplace_back();
        rec.emplace_back();
      }
      auto& row = ins[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        log(trace, BumpEvent::Kind::place, 0, x, r, row.size());
        row.push_back(x);
        rec[r].push_back(i);
        break;
      }
      const int y = *it;
      log(trace, BumpEvent::Kind::row_bump, y, x, r, static_cast<std::size_t>(it - row.begin()));
      *it = x;
      x = y;
    }
  }
  return {YoungTableau(std::move(ins)), YoungTableau(std::move(rec))};
}

Permutation rsk_inverse(const YoungTableau& insertion, const YoungTableau& recording) {
  if (insertion.shape() != recording.shape())
    throw std::invalid_argument("insertion and recording tableaux differ in shape");
  Rows ins = insertion.rows();
  Rows rec = recording.rows();
  const int n = insertion.size();
  std::vector<int> word(static_cast<std::size_t>(n));
  for (int i = n; i >= 1; --i) {
    const auto r = static_cast<std::size_t>(recording.row_of(i));
    rec[r].pop_back();
    int x = ins[r].back();
    ins[r].pop_back();
    for (std::size_t rr = r; rr-- > 0;) {
      auto& row = ins[rr];
      // Largest entry smaller than x is the one x displaced.
      auto it = std::lower_bound(row.begin(), row.end(), x);
      --it;
      std::swap(*it, x);
    }
    word[static_cast<std::size_t>(i - 1)] = x;
  }
  return Permutation(std::move(word));
}

SwResult sagan_worley(const Permutation& p, Trace* trace) {
  Rows ins;
  Rows rec;
  std::set<int> marks;

  for (int i = 1; i <= p.size(); ++i) {
    int x = p.at(i);
    bool column_mode = false;
    std::size_t r = 0;
    std::size_t col = 0;  // absolute column, used in column mode

    // Row insertion until a new cell appears or a diagonal entry is bumped.
    for (;;) {
      if (r == ins.size()) {
        log(trace, BumpEvent::Kind::place, 0, x, r, r);
        ins.push_back({x});
        rec.push_back({i});
        break;
      }
      auto& row = ins[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        log(trace, BumpEvent::Kind::place, 0, x, r, r + row.size());
        row.push_back(x);
        rec[r].push_back(i);
        break;
      }
      const auto pos = static_cast<std::size_t>(it - row.begin());
      const int y = *it;
      log(trace, BumpEvent::Kind::row_bump, y, x, r, r + pos);
      *it = x;
      x = y;
      if (pos == 0) {
        column_mode = true;
        col = r + 1;
        break;
      }
      ++r;
    }

    // Column insertion into successive columns to the right.
    while (column_mode) {
      std::size_t height = 0;  // rows meeting this column form an initial segment
      bool bumped = false;
      for (std::size_t rr = 0; rr < ins.size() && rr <= col; ++rr) {
        const std::size_t j = col - rr;
        if (j >= ins[rr].size()) break;
        ++height;
        if (ins[rr][j] > x) {
          const int z = ins[rr][j];
          log(trace, BumpEvent::Kind::col_bump, z, x, rr, col);
          ins[rr][j] = x;
          x = z;
          bumped = true;
          break;
        }
      }
      if (bumped) {
        ++col;
        continue;
      }
      if (height == ins.size()) {
        if (col != height) throw std::logic_error("sagan_worley: invalid new row");
        ins.emplace_back();
        rec.emplace_back();
      } else if (ins[height].size() != col - height) {
        throw std::logic_error("sagan_worley: column top is not addable");
      }
      log(trace, BumpEvent::Kind::place, 0, x, height, col);
      ins[height].push_back(x);
      rec[height].push_back(i);
      marks.insert(i);
      break;
    }
  }

  ShiftedTableau rec_tab(std::move(rec));
  return {ShiftedTableau(std::move(ins)), MarkedShiftedTableau(std::move(rec_tab), std::move(marks))};
}

ShiftedTableau phi(const Permutation& p) {
  return sagan_worley(reading_word(rsk(p).recording)).insertion;
}

std::set<Permutation> phi_preimage(const ShiftedTableau& t) {
  const SPair pair = build_s_sprime(t);
  std::set<Permutation> out;
  auto add_all = [&](const YoungTableau& recording) {
    for (const auto& ins : enumerate_syt(recording.shape()))
      out.insert(rsk_inverse(ins, recording));
  };
  add_all(pair.s);
  if (pair.s_prime) add_all(*pair.s_prime);
  return out;
}

}  // namespace peakfn
