#include "bigmeans/board.hpp"

namespace bigmeans {

bool BestBoard::publish(const mssc::CentroidSet& centroids, double objective, int owner) {
    std::lock_guard lock(mutex_);
    if (best_) {
        const bool better = objective < best_->objective;
        const bool tie_to_lower = objective == best_->objective && owner < best_->owner;
        if (!better && !tie_to_lower) return false;
        if (tie_to_lower) {
            best_ = BoardEntry{centroids, objective, owner};
            return true;
        }
    }
    best_ = BoardEntry{centroids, objective, owner};
    accepted_.push_back(objective);
    return true;
}

double BestBoard::objective() const {
    std::lock_guard lock(mutex_);
    return best_ ? best_->objective : std::numeric_limits<double>::infinity();
}

BoardSnapshot BestBoard::snapshot() const {
    std::lock_guard lock(mutex_);
    return BoardSnapshot{best_, accepted_};
}

} // namespace bigmeans
