#pragma once

#include <map>
#include <string>
#include <vector>

namespace storyarc {

// 27 emotion categories plus "neutral"
const std::vector<std::string>& emotion_vocabulary();

bool is_valid_emotion(const std::string& label);

// intensity weights in [-2, 2]; "neutral" is 0
std::map<std::string, double> default_emotion_weights();

}  // namespace storyarc
