#ifndef BICLOSED_FORMAT_HPP
#define BICLOSED_FORMAT_HPP

#include <string>

#include "biclosed/bijection.hpp"
#include "biclosed/root_system.hpp"

namespace biclosed {

// "a1", "a1+a2", "-a2", "-a1-a2": the root as a signed simple-root sum.
std::string root_string(Root r);

// "{a1,-a2}" with members in lexicographic pair order; "{}" when empty.
std::string root_set_string(const RootSet& c);

// "{a1,a2}" or "{}" over simple-root indices.
std::string simple_subset_string(const SimpleSubset& d);

// "(2,3)Phi+_{{a1},{}}"; the permutation prefix is omitted for the identity.
std::string canonical_string(const CanonicalBiclosed& cb);
std::string canonical_string(const RootSet& c); // classify, then render

} // namespace biclosed

#endif
