#pragma once

#include <vector>

// Paired t-test reference values, frozen from an independent statistical
// implementation (SciPy ttest_rel, two-sided). Do not regenerate casually.
struct TTestFixture {
  std::vector<double> a;
  std::vector<double> b;
  double t;
  double p;
};

inline const std::vector<TTestFixture>& ttest_fixtures() {
  static const std::vector<TTestFixture> cases = {
      {{0.8, 0.82, 0.78, 0.81, 0.79}, {0.75, 0.77, 0.74, 0.76, 0.73}, 15.8113883008, 9.34927463999e-05},
      {{0.4644, 0.4826, 0.4788, 0.8222, 0.8586, 0.9499, 0.7915, 0.3586, 0.3873, 0.827, 0.6904, 0.6291, 0.3328, 0.4717, 0.7785}, {0.4478, 0.4996, 0.4518, 0.836, 0.8316, 0.8904, 0.7677, 0.3029, 0.3786, 0.7797, 0.6825, 0.5603, 0.2878, 0.4592, 0.7702}, 3.78162708823, 0.00202289951864},
      {{0.9061, 0.5808, 0.5313, 0.5659, 0.7755, 0.895, 0.9416, 0.8012, 0.5841, 0.8299, 0.6472, 0.9168}, {0.9038, 0.5434, 0.475, 0.5728, 0.7213, 0.815, 0.9029, 0.7405, 0.5927, 0.7992, 0.6015, 0.8943}, 4.27927956287, 0.00130029003786},
      {{0.3883, 0.4633}, {0.373, 0.4265}, 2.42325581395, 0.249159670541},
      {{0.5427, 0.6586, 0.675, 0.7709, 0.6559, 0.9115, 0.4323, 0.77, 0.6069, 0.4538, 0.8893, 0.5228, 0.7076, 0.8537, 0.7179, 0.3244, 0.6886, 0.8822, 0.9325}, {0.543, 0.6503, 0.6198, 0.7528, 0.6343, 0.8949, 0.3872, 0.7268, 0.5564, 0.4182, 0.8654, 0.5102, 0.6946, 0.7887, 0.7086, 0.2973, 0.6832, 0.8813, 0.9198}, 5.50764246121, 3.1367662482e-05},
      {{0.7521, 0.5729, 0.3702, 0.5443, 0.9413, 0.6435, 0.6896, 0.5627, 0.861, 0.5127}, {0.7458, 0.5393, 0.356, 0.4812, 0.9029, 0.5714, 0.648, 0.5526, 0.8125, 0.5468}, 2.98126809247, 0.015417819317},
      {{0.6843, 0.8546, 0.7426, 0.4566, 0.401}, {0.6025, 0.8588, 0.7809, 0.4516, 0.3411}, 0.950357955284, 0.395745852659},
      {{0.9004, 0.7122, 0.7208, 0.9247, 0.8103, 0.8641, 0.4016, 0.7247, 0.9399, 0.6335, 0.3756, 0.5628, 0.5916, 0.3264, 0.8138, 0.5935, 0.6197, 0.9153, 0.5858}, {0.9059, 0.7156, 0.6928, 0.9215, 0.7851, 0.8097, 0.3834, 0.7205, 0.9088, 0.5599, 0.3208, 0.5904, 0.6181, 0.3445, 0.8341, 0.5933, 0.6151, 0.8791, 0.5713}, 1.98085340965, 0.0630979384541},
      {{0.3523, 0.317, 0.7972, 0.7017, 0.7802, 0.9413, 0.7691, 0.4241, 0.4084, 0.5955, 0.7646, 0.7367, 0.5776}, {0.3007, 0.3299, 0.7795, 0.7137, 0.7509, 0.8848, 0.8097, 0.3908, 0.4026, 0.6261, 0.7907, 0.6967, 0.4979}, 1.41799385881, 0.181634840204},
      {{0.3802, 0.4899, 0.7957, 0.7027, 0.3203, 0.499}, {0.3617, 0.4715, 0.8216, 0.6616, 0.309, 0.4511}, 1.74290102409, 0.14181378295},
      {{0.8434, 0.8761, 0.5212, 0.4176, 0.557, 0.4727}, {0.8297, 0.8137, 0.4373, 0.3576, 0.5251, 0.4408}, 4.4880754372, 0.00647028292739},
      {{0.7011, 0.5276, 0.3222, 0.6286, 0.7872, 0.7973, 0.5215, 0.5077, 0.4017, 0.8991, 0.3784, 0.4975, 0.5631, 0.5328, 0.4492, 0.4288, 0.3564}, {0.631, 0.4718, 0.3225, 0.6201, 0.7559, 0.7965, 0.5277, 0.4842, 0.3349, 0.868, 0.3379, 0.4701, 0.5369, 0.5283, 0.4464, 0.4404, 0.3806}, 3.09334469509, 0.00697645009454},
      {{0.671, 0.4339, 0.5967, 0.5168, 0.8611, 0.3649, 0.7961, 0.3103, 0.5464, 0.3827, 0.742, 0.3611, 0.8095, 0.6523, 0.3708, 0.3969, 0.4436}, {0.6695, 0.3887, 0.5553, 0.4582, 0.8172, 0.3258, 0.7376, 0.2938, 0.5543, 0.3518, 0.7317, 0.3496, 0.8284, 0.5824, 0.3062, 0.3926, 0.4168}, 4.53467109464, 0.000338407427688},
      {{0.866, 0.6063, 0.4194, 0.6644, 0.3044, 0.4356, 0.3565, 0.7068, 0.7293, 0.7551, 0.9166, 0.3249, 0.3934, 0.9379, 0.7959}, {0.8305, 0.6002, 0.4386, 0.6714, 0.2714, 0.4459, 0.3855, 0.7478, 0.7389, 0.667, 0.9315, 0.3014, 0.3842, 0.8765, 0.7535}, 1.21705826646, 0.24370085409},
      {{0.3133, 0.3986, 0.3157, 0.9262, 0.8015, 0.3399, 0.7357, 0.6358, 0.8624, 0.3174, 0.4667, 0.6498, 0.5142, 0.4066, 0.6909}, {0.3275, 0.3508, 0.2425, 0.8916, 0.7656, 0.2983, 0.696, 0.6197, 0.8319, 0.3231, 0.4638, 0.6636, 0.4953, 0.3871, 0.6534}, 3.85492347746, 0.00175047442014},
      {{0.713, 0.4288, 0.394, 0.5428, 0.4872, 0.5881, 0.6372, 0.894, 0.7691, 0.7735, 0.5597, 0.5081, 0.9462, 0.7852}, {0.699, 0.4261, 0.3445, 0.58, 0.4591, 0.5453, 0.597, 0.868, 0.8054, 0.7936, 0.5432, 0.4999, 0.9164, 0.7095}, 1.98817158531, 0.0682699653677},
      {{0.3401, 0.9383, 0.7178, 0.5171}, {0.3242, 0.8923, 0.6753, 0.4998}, 3.79417502863, 0.0321316160758},
      {{0.8154, 0.3319, 0.7531, 0.9271, 0.6586, 0.5353, 0.8071, 0.5667, 0.314, 0.9499, 0.9078, 0.6177, 0.3673, 0.6091, 0.8642}, {0.8432, 0.3288, 0.7083, 0.8674, 0.7056, 0.5422, 0.7764, 0.5371, 0.2153, 0.9397, 0.8933, 0.6424, 0.309, 0.6125, 0.8389}, 1.79049311409, 0.0950157218999},
      {{0.804, 0.7239, 0.926, 0.8918, 0.7637, 0.9082, 0.9257, 0.4046, 0.4109, 0.8776, 0.6307, 0.3862, 0.5371, 0.6272, 0.3871, 0.5172, 0.5581, 0.6625, 0.5579, 0.6273}, {0.7326, 0.7228, 0.9604, 0.9033, 0.7852, 0.8977, 0.9263, 0.3764, 0.363, 0.8847, 0.6104, 0.3722, 0.5052, 0.6059, 0.4087, 0.4763, 0.5457, 0.6336, 0.5337, 0.5848}, 2.52881728104, 0.0204567583993},
      {{0.5715, 0.8253, 0.6076, 0.8834, 0.6966, 0.9171, 0.9077, 0.7015, 0.8232, 0.7818, 0.7178, 0.7613, 0.528}, {0.5302, 0.8484, 0.6051, 0.8402, 0.6941, 0.8523, 0.8472, 0.6752, 0.7812, 0.7373, 0.7152, 0.7774, 0.5276}, 2.77925084395, 0.0166735349513},
      {{0.8243, 0.3426, 0.4313, 0.8981, 0.7336, 0.4492, 0.6584, 0.863, 0.8383, 0.8577, 0.9356, 0.9104, 0.349, 0.5795, 0.8257, 0.4699, 0.3807}, {0.8158, 0.3052, 0.4441, 0.8826, 0.7571, 0.4387, 0.6019, 0.8582, 0.7784, 0.8647, 0.9203, 0.9285, 0.3567, 0.5864, 0.8255, 0.4412, 0.3331}, 1.97020343611, 0.0663744482617},
  };
  return cases;
}
