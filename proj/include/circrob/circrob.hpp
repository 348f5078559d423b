#pragma once

#include "circrob/core.hpp"
#include "circrob/gen.hpp"
#include "circrob/io.hpp"
#include "circrob/oracle.hpp"
#include "circrob/predicates.hpp"
#include "circrob/recognize.hpp"
#include "circrob/verify.hpp"
