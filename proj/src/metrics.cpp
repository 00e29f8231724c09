#include "scout/metrics.hpp"

#include <stdexcept>
#include <string>

namespace scout {

char32_t InstrumentedReader::read(std::size_t i) const {
    if (i >= text_.size()) {
        throw std::out_of_range("instrumented read at " + std::to_string(i) + " past length " +
                                std::to_string(text_.size()));
    }
    saturating_add(metrics_->memory_lookups);
    return text_[i];
}

} // namespace scout
