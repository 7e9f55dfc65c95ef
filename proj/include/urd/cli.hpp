#ifndef URD_CLI_HPP
#define URD_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace urd {

// Exit codes: 0 success, 1 verification failure or nonexistence,
// 2 usage error, 3 Unknown/Unavailable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace urd

#endif // URD_CLI_HPP
