#include "g2forge/exact_scalar.hpp"
