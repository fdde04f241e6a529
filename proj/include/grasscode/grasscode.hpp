#pragma once

#include "grasscode/bigint.hpp"
#include "grasscode/encoders.hpp"
#include "grasscode/enumcode.hpp"
#include "grasscode/ferrers.hpp"
#include "grasscode/field.hpp"
#include "grasscode/grassmann.hpp"
#include "grasscode/lexicode.hpp"
#include "grasscode/matrix.hpp"
#include "grasscode/partitions.hpp"
#include "grasscode/subspace.hpp"
#include "grasscode/text_io.hpp"
