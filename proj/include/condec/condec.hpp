#pragma once

#include "condec/alphabet.hpp"
#include "condec/cd_check.hpp"
#include "condec/extension.hpp"
#include "condec/gen_format.hpp"
#include "condec/generator.hpp"
#include "condec/nonblocking.hpp"
#include "condec/operations.hpp"
#include "condec/oracle.hpp"
