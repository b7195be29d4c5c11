#ifndef TORIC_IO_HPP
#define TORIC_IO_HPP

#include <nlohmann/json.hpp>

#include "toric/counting.hpp"

namespace toric::io {

using Json = nlohmann::json;

/** Malformed request; pointer is a JSON pointer into the request document. */
class SchemaError : public std::runtime_error
{
  public:
    SchemaError(std::string pointer, const std::string& what)
        : std::runtime_error(what), pointer_(std::move(pointer))
    {
    }
    const std::string& pointer() const { return pointer_; }

  private:
    std::string pointer_;
};

constexpr int kSchemaVersion = 1;

/** "group op" strings accepted by execute(). */
const std::vector<std::string>& commands();

/**
 * Runs one command on a payload. Throws SchemaError for malformed input
 * or unknown commands and DomainError for violated preconditions.
 * The pointer base is prepended to reported JSON pointers.
 */
Json execute(const std::string& command, const Json& payload, const std::string& base = "");

/** Executes {"schema": 1, "command": ..., "payload": {...}}. */
Json execute_request(const Json& request);

/** Integers below 2^53 in magnitude become numbers, others decimal strings. */
Json to_json(const Integer& x);
Json to_json(const Rational& q);
Json to_json(const IntVector& v);
/** Columns become inner arrays. */
Json columns_to_json(const IntMatrix& M);
Json to_json(const AbelianGroup& G);
Json to_json(const Fan& fan);
Json to_json(const Cone& sigma);
Json to_json(const LaurentPolynomial& f);

} // namespace toric::io

#endif
