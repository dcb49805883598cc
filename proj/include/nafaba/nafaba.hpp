#pragma once

#include "nafaba/aba.hpp"
#include "nafaba/cli.hpp"
#include "nafaba/error.hpp"
#include "nafaba/generate.hpp"
#include "nafaba/io.hpp"
#include "nafaba/lp.hpp"
#include "nafaba/translate.hpp"
#include "nafaba/verify.hpp"
