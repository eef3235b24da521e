#pragma once

#include "texcomp/batch.hpp"
#include "texcomp/corpus.hpp"
#include "texcomp/error.hpp"
#include "texcomp/feedback.hpp"
#include "texcomp/lexical_diversity.hpp"
#include "texcomp/manifest.hpp"
#include "texcomp/readability.hpp"
#include "texcomp/scores.hpp"
#include "texcomp/segmentation.hpp"
#include "texcomp/serialization.hpp"
