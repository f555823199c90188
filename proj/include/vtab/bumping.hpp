#pragma once

#include <optional>
#include <vector>

namespace vtab {

// Spots of {min(x), ..., max(x)} not occupied by x, increasing.
std::vector<int> interior_gaps(const std::vector<int>& x);

// t is the bumping sequence of some w in R_k^n iff t_min > l - j, where j
// counts the interior gaps m and l = is(t, m).
bool bumping_criterion(const std::vector<int>& t, int n);

// a ends some w in R_k^n iff n + 1 - a_max > l' - j, l' = is(m, a).
bool suffix_criterion(const std::vector<int>& a, int n);

// k cars on a street of n spots; car j (1-based) is parked at positions[j-1].
class ReparkingInstance {
public:
    ReparkingInstance(int n, std::vector<int> positions);

    int n() const noexcept { return n_; }
    int k() const noexcept { return static_cast<int>(positions_.size()); }
    const std::vector<int>& positions() const noexcept { return positions_; }

private:
    int n_;
    std::vector<int> positions_;
};

enum class Direction { Right, Left };

struct ReparkOutcome {
    bool success = false;
    // Final spots of the cars that moved; cars that never got to move keep
    // their starting spot.
    std::vector<int> positions;
    std::optional<int> failed_car; // 1-based
    // Empty spots past the far end of the street are at least l' - j
    // (right) or before its start at least l - j (left).
    bool predicted = false;
};

// Right: cars 1..k each move to the closest free spot strictly to their
// right. Left: cars k..1 move to the closest free spot strictly to their
// left. A vacated spot is free for later cars.
ReparkOutcome repark(const ReparkingInstance& instance, Direction direction);

} // namespace vtab
