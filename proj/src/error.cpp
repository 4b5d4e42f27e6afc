#include "reshoreval/error.hpp"

#include <sstream>

namespace reshoreval {

std::string Diagnostic::to_string() const
{
    std::ostringstream os;
    os << (file.empty() ? "<input>" : file);
    if (row > 0)
        os << ":" << row;
    if (!column.empty())
        os << ":" << column;
    os << ": " << message;
    return os.str();
}

namespace {

std::string join(const std::vector<Diagnostic>& diagnostics)
{
    std::string out;
    for (const auto& d : diagnostics) {
        if (!out.empty())
            out += '\n';
        out += d.to_string();
    }
    return out;
}

}  // namespace

InputError::InputError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

InputError::InputError(const std::string& message)
    : std::runtime_error(message), diagnostics_{Diagnostic{{}, 0, {}, message}}
{
}

}  // namespace reshoreval
