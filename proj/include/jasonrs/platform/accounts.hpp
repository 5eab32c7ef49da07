#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace jasonrs::platform {

struct Account {
    std::string username;
    std::string password;
    std::string service;

    friend bool operator==(const Account&, const Account&) = default;
};

/// One `username:password:service` triple per line. Blank lines and lines
/// starting with '#' are skipped. Throws std::runtime_error naming the line.
std::vector<Account> parse_accounts(std::string_view text);
std::vector<Account> load_accounts(const std::string& path);

} // namespace jasonrs::platform
