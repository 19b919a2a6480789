#pragma once

#include "hodmd/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hodmd {

/// Uniformly sampled multivariate waveform. Column m of `samples` is the
/// measurement vector at time t0 + m*dt; rows are ports.
struct SnapshotSet {
    std::vector<std::string> ports;
    double dt = 0.0;
    double t0 = 0.0;
    RealMatrix samples;  // p x (q+1)

    Index port_count() const { return samples.rows(); }
    Index sample_count() const { return samples.cols(); }
    /// q in the snapshot-sequence sense: index of the last sample.
    Index q() const { return samples.cols() - 1; }
    double time_at(Index m) const { return t0 + static_cast<double>(m) * dt; }
};

/// Consecutive snapshot matrices, optionally delay-embedded. Column j of
/// s1 stacks samples j .. j+s-1 (delay i in block row i, oldest on top);
/// s2 is the same construction shifted one sample forward.
struct EmbeddedPair {
    Index s = 1;  // embedding depth
    Index p = 1;  // original port count
    double dt = 0.0;
    double t0 = 0.0;
    std::vector<std::string> ports;
    RealMatrix s1;  // (s*p) x (q-s)
    RealMatrix s2;  // (s*p) x (q-s)
};

/// Load a waveform CSV. Layout: optional '#' comment lines, then a header
/// row, then one row per sample. A first column named "time"/"t" supplies
/// the grid (validated uniform to 1e-6 relative jitter); otherwise
/// dt_override must be given. Headerless all-numeric files are accepted
/// with dt_override; ports are then auto-named y0, y1, ...
SnapshotSet load_csv(const std::string& path,
                     std::optional<double> dt_override = std::nullopt);

/// Write a waveform CSV (header + time column, 17 significant digits).
/// `comment` lines, when given, are emitted first prefixed with "# ".
void save_csv(const SnapshotSet& set, const std::string& path,
              const std::vector<std::string>& comments = {});

/// First `count` samples as a new set (training-window slice).
SnapshotSet prefix(const SnapshotSet& set, Index count);

/// Plain consecutive pair: s1 = [y_0 .. y_{q-1}], s2 = [y_1 .. y_q].
EmbeddedPair make_pair(const SnapshotSet& set);

/// Delay-embedded pair with depth s, 1 <= s <= q-1.
EmbeddedPair make_embedded_pair(const SnapshotSet& set, Index s);

/// Smallest depth s with s*p >= 2*(q_train - s), i.e. the least s giving
/// the augmented matrix at least twice as many rows as columns; clamped
/// to [1, q_train-1]. q_train is the training sample count.
Index recommend_depth(Index p, Index q_train);

}  // namespace hodmd
