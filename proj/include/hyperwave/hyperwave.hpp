#pragma once

#include "hyperwave/cwt.hpp"
#include "hyperwave/errors.hpp"
#include "hyperwave/fft.hpp"
#include "hyperwave/field.hpp"
#include "hyperwave/hyperanalytic.hpp"
#include "hyperwave/io.hpp"
#include "hyperwave/morse.hpp"
#include "hyperwave/parallel.hpp"
#include "hyperwave/quat.hpp"
#include "hyperwave/ridge.hpp"
#include "hyperwave/spectral.hpp"
#include "hyperwave/synth.hpp"
#include "hyperwave/wavelet.hpp"
