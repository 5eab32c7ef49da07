#include "jasonrs/platform/accounts.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace jasonrs::platform {

std::vector<Account> parse_accounts(std::string_view text) {
    std::vector<Account> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string line(text.substr(pos, end - pos));
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        auto a = line.find(':');
        auto b = a == std::string::npos ? a : line.find(':', a + 1);
        if (b == std::string::npos || line.find(':', b + 1) != std::string::npos) {
            throw std::runtime_error("accounts line " + std::to_string(line_no) +
                                     ": expected username:password:service");
        }
        Account acc{line.substr(0, a), line.substr(a + 1, b - a - 1), line.substr(b + 1)};
        if (acc.username.empty() || acc.service.empty()) {
            throw std::runtime_error("accounts line " + std::to_string(line_no) + ": empty username or service");
        }
        out.push_back(std::move(acc));
    }
    return out;
}

std::vector<Account> load_accounts(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot read accounts file " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_accounts(ss.str());
}

} // namespace jasonrs::platform
