#include "coiso/rational.hpp"
