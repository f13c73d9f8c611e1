// Generated by oracles/stats_reference.py; do not edit.
pub const CASES: &[(&[f64], &[f64], f64, f64)] = &[
    (&[0.0, 2.0], &[4.0, 6.0], -2.8284271247461900976, 0.10557280900008412144),
    (&[0.0, 0.0, 1.0, 1.0], &[10.0, 10.0, 11.0, 11.0], -17.320508075688772935, 3.0444230640425463892e-7),
    (&[1.0, 2.0, 3.0, 4.0], &[1.0, 2.0, 3.0, 4.0], 0.0, 1.0),
    (&[1.0, 2.0, 3.0], &[1.0, 2.0, 3.5], -0.14664711502135328917, 0.86661588903812881595),
    (&[5.5, 6.1, 4.9, 5.2, 6.3], &[5.0, 5.4, 4.8], 1.0371259576834630245, 0.14465082410528579513),
    (&[1.0, 1.0, 1.0, 2.0], &[3.0, 3.0, 3.0, 3.0, 3.0, 4.0], -4.308294733275792243, 0.00091544862818100879809),
    (&[0.01, 0.02, 0.015, 0.03], &[0.7, 0.69, 0.71, 0.72, 0.68], -51.629535872008130604, 7.8183794303580168332e-11),
    (&[100.0, 101.0], &[99.0, 103.0, 98.0], 0.22742941307367102019, 0.78076279873557757339),
    (&[-2.833629, 0.740801, -4.003439, 1.059076, 9.025972, 4.496457, 5.291048, -5.0826, -3.72014], &[-0.197389, 5.172333, 5.345443, -0.381722, 0.131792, 6.974524, -1.115, -2.283109, -1.024161, 4.045165, -2.053811, 0.313142, 1.597562, 4.746734, 0.87077, 1.173658, 1.855374, 2.030453, -1.103854, 1.583367, 3.169563, 1.841596, 6.618041, -2.91598, 6.849516, -5.858489, 4.943824, 2.400178, 2.848976, 0.904147, 4.0829], -0.32267470672763488438, 0.52279574726850260212),
    (&[-1.188482, -0.139545, 1.158569], &[-4.695617, -0.568101, 2.142547, -0.313636, -4.060576, -0.550714], 0.5677926779953122738, 0.33838378458405057418),
    (&[-2.100977, -1.097186, -7.367142, 4.201999, -1.737902, 5.607488, 0.856202, 2.919209, 5.943451, 1.784145, 8.21904, -2.053928, 5.396719, 5.647414, -4.537747, -1.506088, -1.497287, -1.523776, 6.00585, 4.053421, 0.141937, 3.95759, -0.706587, -2.437083, 3.603574, 7.81971, 6.837166, 1.692293], &[-0.586364, 0.472288, 0.501914, -0.870401, 0.152871, -2.274661, -0.727517, 0.560955, 1.577596, -0.585078, 1.085509, -0.488647, 1.161685, 1.289528, -0.627118, 1.403095, -0.147526, 1.008943, 0.901224, -0.764506, 1.464626, 1.031806, 0.259576, -1.356312, -0.14005, 0.867455, 2.083736, 0.793332, 0.532548, 1.023016, 1.345133, 0.610031, -0.498923], 0.49214498556089006082, 0.085582031809009142049),
    (&[-4.341628, -3.789257, -0.875367, -2.698556, -0.076536, 1.945338, 1.071756, 0.083298, -2.095078, -0.783568, -3.172855, -3.975451, -5.779631, -3.749617, -6.373682, -6.740542, -0.396884, -4.121507, -4.742651, -1.754758, 5.320442, -1.002104, -0.629911], &[2.748494, -0.353926, -5.079097, 1.802809, -3.211857, -1.831411, 4.056792, -3.202509, 3.381296, 1.311387, 0.022698, -3.878413, 1.71985, 2.411206, -1.810352, -3.258701, 3.783954, -0.559607, 2.557493, -2.062966, 2.657629, -0.643056, -6.194666, 3.134307, -3.682761, 1.607483, 2.936428, 2.689991, 5.269408, -5.237177, -3.768724, 3.276685, 1.362747, -2.735641, -5.021212, -2.382838, -8.411711, -2.650042, -9.933469, 4.783424], -0.43673157594889196771, 0.078300871136374405744),
    (&[-1.573493, 1.132298, 2.942398, 2.016736, 0.199857, -1.202434, -0.739131, -0.013319, 4.603647, -0.536921, 1.356081, 3.79659, 0.10407, 0.178181, 0.555259, 5.149076, -2.847041, 1.792625, -0.864735, -3.33424, -0.461891, 1.816402, 2.108024, -0.198511, 0.131394, -1.733325, 0.038881, 3.219209, 2.962439, -2.095699, 0.038113, 2.423451], &[-1.873678, 3.760477, -1.87238, -0.923126, 9.710622, 3.207567, 2.462442, -1.524321, -2.11548, 6.830432, -0.400002, -8.620363, -1.999437, 8.249128, 2.944586, 3.776851, 5.899219, -1.081378, 5.258235, 2.41985, 6.858354, 4.325563, -3.046805, -0.776141, 3.271881, -1.946428, 2.653491, 6.010543, -1.205734, 1.88688, -0.165355, -2.084269, 4.463312, 3.192468, -0.964682], -0.30635690594082048677, 0.20456401716783273772),
    (&[-0.678013, -0.800729, -2.037529, -3.180202, -1.000106, 3.600568, 1.613787, 2.239499, 0.574202, 1.762457, -0.487937, 1.416497, 2.34433, -0.861208, 0.681866, -5.548205, -2.103001, 2.04122, 4.570226, 3.789551, -1.995537, -4.060076, 4.466227, -2.453436, 1.229893, -0.200208], &[1.361501, 3.35106, 1.21685, 1.239985, 3.02646, 1.025314, 2.951909, 1.201946, 3.349603, -2.762627, 1.848912, 0.410492, 2.843511, 0.113195, 1.180855, 3.420947, 3.517245, 3.10485, 1.88245, -0.750055, 0.845314, 2.149006, 1.858841, 4.255953, 3.867523, 4.806957, 1.735317, 3.095494, 5.60982, 3.274726, -1.79239, 1.86882, -1.993331, 1.219661], -0.76496327505706690029, 0.0073677801940036339011),
    (&[-3.690466, -3.698771, -2.710837, -2.391096, -2.037773, -1.449563, -1.295168, -2.235264, -1.686897, -2.54806, -1.763963, -2.001009, -2.43645, -1.299923, -3.017439, -1.645681, -1.550632, -1.109291, -2.315558, 0.106602, -2.084534, -3.024808, -1.422196, -2.40176, -2.786536, -1.568557, -1.21524, -2.662016, -2.670582, -0.534557], &[-3.893084, -3.678783, -5.191818, -2.507482, -0.196382, -0.953624, -2.794723, -2.449198, -3.461883, -1.428819, -3.101877, -2.263176, -3.670428, -1.322718, -1.35851, -2.076221, -1.896252, -6.174611, -3.154836, -2.342868, -3.058841, -5.165214, -3.377583, -4.571843, 1.805544, -2.277482, -3.140898, -4.658943, -2.459203, -1.807289, 1.128054, -0.039206, -1.561145, -3.848038, -1.432514, -5.341501, -6.100198], 0.44992767982441095309, 0.055247111845033339448),
    (&[2.427499, -0.18371, 2.179788, 2.822479, 1.23809, 3.056109, 3.537773, 2.228939, 2.685293, 2.124859, 3.096679, 3.334204, 2.458334, 2.459265, 2.8111, 2.010638, 1.282375, 1.610064, 2.708031, 2.268232, 2.523038, 3.131389, 1.00004, 2.397672, 2.579307, 2.404663], &[2.230158, 0.807605, 0.575058, 0.081937, 0.666287, -0.247021, 1.564435, 1.118675, 1.423131, 0.738039, 1.455165, 2.183694, 1.240554, -0.196795, 1.363957, 2.696054, 2.140899, 0.802852, 0.431052, 1.018995, 1.833074, 1.650296, 0.853672, 0.617567, 0.855115, 0.88124, 0.795103, 0.516264, 1.856355, 2.054931, 1.959634, 1.209757, 2.078843, 0.895127, 0.101192], 1.5260659645533245215, 4.0575522753003765319e-7),
    (&[-0.41854, -0.827032, -0.875089, -1.04458, -1.052994, -1.931016, -0.344827, -1.318794, -0.841004, -0.920586, -1.088718, -1.164592, -0.275023, -1.178899, -0.880914, -0.803293, -0.501756, -1.486707, -1.190012, -1.032155, -0.441095, -1.234371, -0.621108, -0.901012, -1.333026, -0.837666, -0.661971, -0.783375, -1.080793, -0.919187, -0.76844, -1.575436, -0.600082], &[-7.609743, -0.91336, -0.675546, 2.608438, -5.932977, -2.321575, -2.624981, -3.148655, -6.119964], 1.3897186092492646742, 0.092418813913991549021),
    (&[1.384455, 0.553066, 2.279597, 1.919282, 3.454602, 2.953812, -0.597136, 2.07257, 2.147087, 3.285899, 1.654845, 3.414022, 1.506916, 5.12592, 5.021474, 0.311261, 1.084399, 1.870856, 3.285661, 4.077826, 2.715955, 3.584022, 5.521366, 5.266526, 3.566167, 4.888293, 1.036641], &[-1.741553, 7.032004, 8.806855, 11.791985, 7.224994, 7.920665, -2.630043, 2.904505, 7.462914, 13.33776, -6.758568, 6.552916, 7.995443, 8.246485, 2.587645, 7.339171, 2.682411, 2.194208, -6.083649, -0.740476, 9.315859, -0.66406, 3.672135, -1.309683, 0.550882, 1.087777, 5.000527, 7.576908, 0.804224, 3.730657, 2.202943, 1.018211, 2.716189, 10.045909, 8.463153, -5.396298, -3.305438, -0.561771, 8.308275], -0.21330922374592759593, 0.32688921149696854923),
    (&[1.386767, 3.332411, 0.708742, 3.083253, 1.719249, 0.684902, 1.888585, 0.104132, 3.908971, 0.557129, 0.767864, 3.73864], &[3.883467, 4.26314, 3.256222, 2.952683, 3.374781, 3.540151, 3.22937, 2.950674, 3.391236, 3.71885, 3.947312, 3.049567, 4.009395, 3.811813, 3.494166, 3.356173, 3.670227, 3.410098, 3.961249, 4.270945, 3.400085, 3.079753, 3.357279, 3.740512], -2.0649881395201676543, 0.0010375018067863307631),
    (&[0.607571, 1.984788, -1.159151, 0.929125, 2.774563, 1.401824, 2.099119, 2.841537, 0.842689, -0.189873, 1.449643, 0.870077, 0.614114, 0.659295, 0.851506, 0.823611, 0.992905, 0.980525, 1.58374, 0.476712, 1.625332, -0.102962, -0.58529, 0.657278], &[2.78344, 0.385917, 2.793251, 1.687108, -0.980041, 4.268458, 2.259742, -5.121018, 0.873094, 0.686182, 2.609314, 3.455261, -0.124752, 2.326322, 5.398638, -0.068307, 3.093116, 1.704363, 4.100296, 0.611972, -0.837846, 3.838443, 3.06532], -0.42315208490640798987, 0.16387152506531329143),
];
