#pragma once

#include "bruhat_taquin/error.hpp"
#include "bruhat_taquin/partition.hpp"
#include "bruhat_taquin/permutation.hpp"
#include "bruhat_taquin/young.hpp"
#include "bruhat_taquin/polynomial.hpp"
#include "bruhat_taquin/schubert.hpp"
#include "bruhat_taquin/chains.hpp"
#include "bruhat_taquin/plactic.hpp"
#include "bruhat_taquin/growth.hpp"
#include "bruhat_taquin/serialize.hpp"
#include "bruhat_taquin/render.hpp"
#include "bruhat_taquin/cache.hpp"
#include "bruhat_taquin/verify.hpp"
