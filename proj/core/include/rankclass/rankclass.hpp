#pragma once

#include "rankclass/diagram.hpp"
#include "rankclass/error.hpp"
#include "rankclass/grassmann.hpp"
#include "rankclass/partition.hpp"
#include "rankclass/perm.hpp"
#include "rankclass/rankset.hpp"
#include "rankclass/specht.hpp"
#include "rankclass/stanley.hpp"
#include "rankclass/symfunc.hpp"
#include "rankclass/verify.hpp"
