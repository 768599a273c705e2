#pragma once

#include "fakeweather/dataset.hpp"
#include "fakeweather/error.hpp"
#include "fakeweather/file_io.hpp"
#include "fakeweather/image.hpp"
#include "fakeweather/image_codec.hpp"
#include "fakeweather/keyed_stream.hpp"
#include "fakeweather/mask.hpp"
#include "fakeweather/mask_io.hpp"
#include "fakeweather/maskgen.hpp"
#include "fakeweather/metrics.hpp"
#include "fakeweather/patterns.hpp"
#include "fakeweather/types.hpp"
