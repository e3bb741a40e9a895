#include "predsim/tsv.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace predsim {

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

void for_each_tsv_record(
    std::istream& in,
    const std::function<void(std::size_t, const std::vector<std::string_view>&)>& fn) {
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (!view.empty() && view.back() == '\r') view.remove_suffix(1);
        if (!view.empty() && view.front() == '#') continue;
        const bool blank = std::all_of(view.begin(), view.end(), [](unsigned char c) {
            return std::isspace(c) != 0;
        });
        if (blank) continue;
        fn(number, split_tabs(view));
    }
}

} // namespace predsim
