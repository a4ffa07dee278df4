#pragma once

#include <optional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mrprof {

// Event alphabet plus the two virtual censor states. LC is addressable only
// as a source row, RC only as a destination column; both reuse index S so
// transition storage stays a single (S+1) x (S+1) block.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    int lc_index() const { return size(); }
    int rc_index() const { return size(); }

    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index(std::string_view label) const;

    bool operator==(const StateSpace& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int, std::less<>> index_;
};

// One subject's ordered (event, arrival time) pairs. Times are fractional
// months from study start and must be nondecreasing.
struct EventSequence {
    std::string subject_id;
    std::vector<int> events;
    std::vector<double> times;

    int length() const { return static_cast<int>(events.size()); }
};

// Throws std::invalid_argument naming the subject on any violation:
// empty sequence, events/times length mismatch, out-of-range state index,
// decreasing times.
void validate_sequence(const EventSequence& seq, const StateSpace& space);

}  // namespace mrprof
