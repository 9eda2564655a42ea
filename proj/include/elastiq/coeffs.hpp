// Generated by tools/codegen/emit_headers.py -- do not edit by hand.
#pragma once

namespace elastiq::coeffs {

inline constexpr double kW4[4] = {0.35416666666666669, 1.2291666666666667, 0.89583333333333337, 1.0208333333333333};
inline constexpr double kW6[6] = {0.31594907407407408, 1.3903935185185186, 0.62754629629629632, 1.2405092592592593, 0.91168981481481481, 1.0139120370370371};
inline constexpr double kD1Int4[5] = {0.083333333333333329, -0.66666666666666663, 0, 0.66666666666666663, -0.083333333333333329};
inline constexpr double kD1Int6[7] = {-0.016666666666666666, 0.14999999999999999, -0.75, 0, 0.75, -0.14999999999999999, 0.016666666666666666};
inline constexpr double kD1Bnd4[4][6] = {
  {-1.411764705882353, 1.7352941176470589, -0.23529411764705882, -0.088235294117647065, 0, 0},
  {-0.5, 0, 0.5, 0, 0, 0},
  {0.093023255813953487, -0.68604651162790697, 0, 0.68604651162790697, -0.093023255813953487, 0},
  {0.030612244897959183, 0, -0.60204081632653061, 0, 0.65306122448979587, -0.081632653061224483}
};
inline constexpr double kD1Bnd6[6][9] = {
  {-1.5825335189391163, 2.0503252171506254, -0.20929901254467156, -0.34871907587857476, 0.036701915484243862, 0.053524474727493263, 0, 0, 0},
  {-0.46591007889601083, 0, 0.32576745562677467, 0.18179842207978394, -0.011348816559837953, -0.03030698225070988, 0, 0, 0},
  {0.10537522029591377, -0.72177138407311781, 0, 0.77687610147956887, -0.1935427681462355, 0.03306283044387065, 0, 0, 0},
  {0.088816321453007399, -0.20376417656693827, -0.39300449918102465, 0, 0.56342393896041965, -0.068906927080093716, 0.013435342414629596, 0, 0},
  {-0.012719168324094057, 0.017307773687105919, 0.13322189778962662, -0.76663422340710652, 0, 0.77507229204575911, -0.1645296432652025, 0.018281071473911389, 0},
  {-0.016678969785063252, 0.041560441288757993, -0.020463764145415248, 0.084306801721929225, -0.69692980119682701, 0, 0.73970913906075209, -0.1479418278121504, 0.016437980868016712}
};
inline constexpr int kD1BndRows4 = 4, kD1BndCols4 = 6;
inline constexpr int kD1BndRows6 = 6, kD1BndCols6 = 9;

inline constexpr double kB1_4[4] = {-1.8333333333333333, 3, -1.5, 0.33333333333333331};
inline constexpr double kB1_6[5] = {-2.0833333333333335, 4, -3, 1.3333333333333333, -0.25};
inline constexpr double kBt1_4[4] = {-0.33333333333333331, -0.5, 1, -0.16666666666666666};
inline constexpr double kBt1_6[5] = {-0.25, -0.83333333333333337, 1.5, -0.5, 0.083333333333333329};

inline constexpr int kJL4 = 5, kJR4 = 5, kBS4 = 7, kKS4 = 5;
inline constexpr double kM4Left[5][7][7] = {
  {
    {0.70588235294117652, -0.86764705882352944, 0.11764705882352941, 0.044117647058823532, 0, 0, 0},
    {-0.86764705882352944, 1.0664828431372548, -0.14460784313725492, -0.05422794117647059, 0, 0, 0},
    {0.11764705882352941, -0.14460784313725492, 0.019607843137254902, 0.0073529411764705881, 0, 0, 0},
    {0.044117647058823532, -0.05422794117647059, 0.0073529411764705881, 0.0027573529411764708, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0}
  },
  {
    {0.30729166666666669, 0, -0.30729166666666669, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {-0.30729166666666669, 0, 0.30729166666666669, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0}
  },
  {
    {0.078275798820974449, -0.28520569907611237, 0.25968679409840872, -0.058917509381629908, 0.0048851053342774432, 0.0012755102040816326, 0},
    {-0.28520569907611237, 1.20719766134604, -0.985497334513597, 0.10182135955900838, -0.035329532247490317, -0.0029864550678486228, 0},
    {0.25968679409840872, -0.985497334513597, 1.3971148505630091, -0.87522848559153255, 0.20266778705638222, 0.00125638838732952, 0},
    {-0.058917509381629908, 0.10182135955900838, -0.87522848559153255, 1.0674740599035131, -0.23654388769364587, 0.0013944632042868512, 0},
    {0.0048851053342774432, -0.035329532247490317, 0.20266778705638222, -0.23654388769364587, 0.06531034987005245, -0.00098982231957593387, 0},
    {0.0012755102040816326, -0.0029864550678486228, 0.00125638838732952, 0.0013944632042868512, -0.00098982231957593387, 4.9915591726552928e-05, 0},
    {0, 0, 0, 0, 0, 0, 0}
  },
  {
    {0.033550181571182412, -0.076313908767024902, 0.013291147078061854, 0.035633195656139711, -0.0048851053342774432, -0.0012755102040816326, 0},
    {-0.076313908767024902, 0.18465282885003853, -0.099061489015814769, -0.047593418382537785, 0.035329532247490317, 0.0029864550678486228, 0},
    {0.013291147078061854, -0.099061489015814769, 0.52547892639241778, -0.19310431586298332, -0.24585459344500363, -0.00074967514667793834, 0},
    {0.035633195656139711, -0.047593418382537785, -0.19310431586298332, 0.50854150132277953, -0.42556235980715656, 0.1220853970737584, 0},
    {-0.0048851053342774432, 0.035329532247490317, -0.24585459344500363, -0.42556235980715656, 0.80512923096408329, -0.16415670462513599, 0},
    {-0.0012755102040816326, 0.0029864550678486228, -0.00074967514667793834, 0.1220853970737584, -0.16415670462513599, 0.041110037834288529, 0},
    {0, 0, 0, 0, 0, 0, 0}
  },
  {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0.042173379907318245, -0.16818680638862141, 0.12652013972195475, -0.00050671324065158156, 0},
    {0, 0, -0.16818680638862141, 0.83789375249919762, -0.50456041916586425, -0.16514652694471194, 0},
    {0, 0, 0.12652013972195475, -0.50456041916586425, 0.75456041916586425, -0.50152013972195475, 0.125},
    {0, 0, -0.00050671324065158156, -0.16514652694471194, -0.50152013972195475, 0.83384004657398492, -0.16666666666666666},
    {0, 0, 0, 0, 0.125, -0.16666666666666666, 0.041666666666666664}
  }
};
inline constexpr double kM4Right[5][7][7] = {
  {
    {0.041666666666666664, -0.16666666666666666, 0.125, 0, 0, 0, 0},
    {-0.16666666666666666, 0.83384004657398492, -0.50152013972195475, -0.16514652694471194, -0.00050671324065158156, 0, 0},
    {0.125, -0.50152013972195475, 0.75456041916586425, -0.50456041916586425, 0.12652013972195475, 0, 0},
    {0, -0.16514652694471194, -0.50456041916586425, 0.83789375249919762, -0.16818680638862141, 0, 0},
    {0, -0.00050671324065158156, 0.12652013972195475, -0.16818680638862141, 0.042173379907318245, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0}
  },
  {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0.041060122242561982, -0.16316688230556006, 0.12069093386947155, -0.0020060635340074582, 0.0059729101356972457, -0.0025510204081632651},
    {0, -0.16316688230556006, 0.78550113099688412, -0.39791026242259814, -0.22094050899124307, -0.023891640542788983, 0.020408163265306121},
    {0, 0.12069093386947155, -0.39791026242259814, 0.46958518405096511, -0.22820331631202198, 0.035837460814183472, 0},
    {0, -0.0020060635340074582, -0.22094050899124307, -0.22820331631202198, 0.49385530489026558, -0.023891640542788983, -0.018813775510204082},
    {0, 0.0059729101356972457, -0.023891640542788983, 0.035837460814183472, -0.023891640542788983, 0.0059729101356972457, 0},
    {0, -0.0025510204081632651, 0.020408163265306121, 0, -0.018813775510204082, 0, 0.00095663265306122447}
  },
  {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 4.9915591726552928e-05, -0.00098982231957593387, 0.0013944632042868512, 0.00125638838732952, -0.0029864550678486228, 0.0012755102040816326},
    {0, -0.00098982231957593387, 0.06531034987005245, -0.23654388769364587, 0.20266778705638222, -0.035329532247490317, 0.0048851053342774432},
    {0, 0.0013944632042868512, -0.23654388769364587, 1.0674740599035131, -0.87522848559153255, 0.10182135955900838, -0.058917509381629908},
    {0, 0.00125638838732952, 0.20266778705638222, -0.87522848559153255, 1.3971148505630091, -0.985497334513597, 0.25968679409840872},
    {0, -0.0029864550678486228, -0.035329532247490317, 0.10182135955900838, -0.985497334513597, 1.20719766134604, -0.28520569907611237},
    {0, 0.0012755102040816326, 0.0048851053342774432, -0.058917509381629908, 0.25968679409840872, -0.28520569907611237, 0.078275798820974449}
  },
  {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 4.9915591726552928e-05, -0.00098982231957593387, 0.0013944632042868512, 0.00125638838732952, -0.0029864550678486228, 0.0012755102040816326},
    {0, -0.00098982231957593387, 0.019628099967199199, -0.027652097384558427, -0.024914084453760574, 0.059221172790279303, -0.025293268599583568},
    {0, 0.0013944632042868512, -0.027652097384558427, 0.038956317271814457, 0.035099000449038666, -0.083430879196721264, 0.035633195656139711},
    {0, 0.00125638838732952, -0.024914084453760574, 0.035099000449038666, 0.33891528816881888, -0.075169848473025797, -0.27518674407840071},
    {0, -0.0029864550678486228, 0.059221172790279303, -0.083430879196721264, -0.075169848473025797, 0.17867991871434127, -0.076313908767024902},
    {0, 0.0012755102040816326, -0.025293268599583568, 0.035633195656139711, -0.27518674407840071, -0.076313908767024902, 0.33988521558478785}
  },
  {
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0.0027573529411764708, 0.0073529411764705881, -0.05422794117647059, 0.044117647058823532},
    {0, 0, 0, 0.0073529411764705881, 0.019607843137254902, -0.14460784313725492, 0.11764705882352941},
    {0, 0, 0, -0.05422794117647059, -0.14460784313725492, 1.0664828431372548, -0.86764705882352944},
    {0, 0, 0, 0.044117647058823532, 0.11764705882352941, -0.86764705882352944, 0.70588235294117652}
  }
};
inline constexpr double kM4Kernel[5][5] = {
  {0.041666666666666664, -0.16666666666666666, 0.125, 0, 0},
  {-0.16666666666666666, 0.83333333333333337, -0.5, -0.16666666666666666, 0},
  {0.125, -0.5, 0.75, -0.5, 0.125},
  {0, -0.16666666666666666, -0.5, 0.83333333333333337, -0.16666666666666666},
  {0, 0, 0.125, -0.16666666666666666, 0.041666666666666664}
};
inline constexpr int kJL6 = 9, kJR6 = 9, kBS6 = 12, kKS6 = 7;
inline constexpr double kM6Left[9][12][12] = {
  {
    {0.87303943600430123, -1.2587234993451364, 0.55289246697589278, -0.32514895135174138, 0.14306215793968835, 0.053324747236979657, 0.026018696995248499, -0.095001853634647776, 0.0047304296729571635, 0.047649634197182926, -0.026195815730459055, 0.0043525510397338912},
    {-1.2587234993451364, 2.394840506333253, -2.3894186601125096, 2.0308587345147204, -0.61821556823260615, -0.30975951639386434, -0.13279953352922161, 0.39874418295239522, 0.043231005599548962, -0.28439146517022879, 0.15085413812237441, -0.025220324738725281},
    {0.55289246697589278, -2.3894186601125096, 4.9604250582842582, -5.1781556347228657, 1.9347501309833404, 0.43774978862190783, 0.13340056383371432, -0.66021865028389426, -0.074406203862848339, 0.50937728212463573, -0.27091367589200444, 0.044517534050372891},
    {-0.32514895135174138, 2.0308587345147204, -5.1781556347228657, 6.3859450295051339, -3.5256158922664427, 0.33952831728215643, 0.17226181060655546, 0.22301841357987376, -0.071532720307474415, -0.090381442373678136, 0.03977198017935462, -0.00054964464559280324},
    {0.14306215793968835, -0.61821556823260615, 1.9347501309833404, -3.5256158922664427, 3.5646263295443688, -1.8570020888723393, -0.026513948031225417, 0.59237107797178312, 0.059610225611546497, -0.54565993144167702, 0.3526143542339632, -0.074026847440399904},
    {0.053324747236979657, -0.30975951639386434, 0.43774978862190783, 0.33952831728215643, -1.8570020888723393, 2.4876210743459399, -1.2954899391280819, -0.14978884795591421, 0.32416753373764501, 0.080062366853188932, -0.14915987305227446, 0.038746437324656394},
    {0.026018696995248499, -0.13279953352922161, 0.13340056383371432, 0.17226181060655546, -0.026513948031225417, -1.2954899391280819, 2.3729970200636066, -1.5384676547152485, -0.10718218357795503, 0.69716880251201385, -0.36547743760255152, 0.064083802573145374},
    {-0.095001853634647776, 0.39874418295239522, -0.66021865028389426, 0.22301841357987376, 0.59237107797178312, -0.14978884795591421, -1.5384676547152485, 2.2241331876114168, -1.2185005843492234, 0.14622901814259304, 0.1110330042844844, -0.033551293603618158},
    {0.0047304296729571635, 0.043231005599548962, -0.074406203862848339, -0.071532720307474415, 0.059610225611546497, 0.32416753373764501, -0.10718218357795503, -1.2185005843492234, 2.1711066099043514, -1.6619985590522224, 0.62606375223631372, -0.095289305612639277},
    {0.047649634197182926, -0.28439146517022879, 0.50937728212463573, -0.090381442373678136, -0.54565993144167702, 0.080062366853188932, 0.69716880251201385, 0.14622901814259304, -1.6619985590522224, 1.735239745025918, -0.76039449677010496, 0.12709904595237875},
    {-0.026195815730459055, 0.15085413812237441, -0.27091367589200444, 0.03977198017935462, 0.3526143542339632, -0.14915987305227446, -0.36547743760255152, 0.1110330042844844, 0.62606375223631372, -0.76039449677010496, 0.35265932651521525, -0.060855256524311258},
    {0.0043525510397338912, -0.025220324738725281, 0.044517534050372891, -0.00054964464559280324, -0.074026847440399904, 0.038746437324656394, 0.064083802573145374, -0.033551293603618158, -0.095289305612639277, 0.12709904595237875, -0.060855256524311258, 0.010693301624999355}
  },
  {
    {0.29359662708631523, -0.1848163233571081, 0.1876436684348354, -0.49347934208296873, 0.24727907009715311, -0.073546015812678389, 0.054693662879572322, -0.023906073325138652, -0.056313549333074621, 0.081707631767475919, -0.039690713957773772, 0.0068313576033903435},
    {-0.1848163233571081, 0.85516697296547572, -1.7659668208461563, 1.7690654092442109, -0.58189498985071397, -0.19879490693808743, -0.14998932383508545, 0.35289816059807982, 0.11202240924795273, -0.37201548718702931, 0.19897239822578872, -0.034647498267327437},
    {0.1876436684348354, -1.7659668208461563, 4.1621504084262035, -4.4527515969581222, 1.8192590279878342, 0.42621267783138023, 0.066345785121966733, -0.69543472070830514, -0.080604507463218414, 0.61816797146739122, -0.34483413363338289, 0.059812240339574045},
    {-0.49347934208296873, 1.7690654092442109, -4.4527515969581222, 6.0709050498656145, -3.6083312005427413, 0.36248086746643243, 0.27119126910310054, 0.25611221823957564, -0.086346928045668597, -0.17560354827769054, 0.099663061485020632, -0.012905259496763003},
    {0.24727907009715311, -0.58189498985071397, 1.8192590279878342, -3.6083312005427413, 3.6849091578844368, -1.8762919460373999, -0.066721871540788832, 0.55437782418153447, 0.060695014968740357, -0.47844436837071391, 0.31151125319859496, -0.066346971975936544},
    {-0.073546015812678389, -0.19879490693808743, 0.42621267783138023, 0.36248086746643243, -1.8762919460373999, 2.4995090450956035, -1.2892443986977389, -0.12767551439410213, 0.33779748443612134, 0.019866697508712255, -0.11173151369641356, 0.031417523238170729},
    {0.054693662879572322, -0.14998932383508545, 0.066345785121966733, 0.27119126910310054, -0.066721871540788832, -1.2892443986977389, 2.3562399602695647, -1.5416486569167929, -0.096686468472726564, 0.7040083504639546, -0.37450620832697329, 0.06631789995194709},
    {-0.023906073325138652, 0.35289816059807982, -0.69543472070830514, 0.25611221823957564, 0.55437782418153447, -0.12767551439410213, -1.5416486569167929, 2.2186578681095792, -1.2319156063903067, 0.17447115197558904, 0.09426077837778149, -0.030197429747494349},
    {-0.056313549333074621, 0.11202240924795273, -0.080604507463218414, -0.086346928045668597, 0.060695014968740357, 0.33779748443612134, -0.096686468472726564, -1.2319156063903067, 2.1690833635933693, -1.6564718620463601, 0.62355191687378952, -0.094811267368618432},
    {0.081707631767475919, -0.37201548718702931, 0.61816797146739122, -0.17560354827769054, -0.47844436837071391, 0.019866697508712255, 0.7040083504639546, 0.17447115197558904, -1.6564718620463601, 1.6980723705519472, -0.73556570690121781, 0.12180679904794155},
    {-0.039690713957773772, 0.19897239822578872, -0.34483413363338289, 0.099663061485020632, 0.31151125319859496, -0.11173151369641356, -0.37450620832697329, 0.09426077837778149, 0.62355191687378952, -0.73556570690121781, 0.33554751912052755, -0.057178650765741551},
    {0.0068313576033903435, -0.034647498267327437, 0.059812240339574045, -0.012905259496763003, -0.066346971975936544, 0.031417523238170729, 0.06631789995194709, -0.030197429747494349, -0.094811267368618432, 0.12180679904794155, -0.057178650765741551, 0.0099012574408575676}
  },
  {
    {0.022171036053044758, -0.13216751045725217, 0.26465816152747218, -0.25437742420970599, 0.072013934153021042, 0.05130060266919189, 0.021570777791221605, -0.062950260358011545, -0.019413272592933017, 0.067993896175440521, -0.037535897712038635, 0.0067359569605494069},
    {-0.13216751045725217, 1.0571281716142666, -1.7289975322782607, 1.7601589058628986, -1.0970146283890323, 0.064685194778970917, -0.12638600308685535, 0.26786791846526919, 0.13912717177504608, -0.36832945404254352, 0.19954689939976655, -0.035619133642273877},
    {0.26465816152747218, -1.7289975322782607, 3.7026702814655423, -4.0086999786335316, 1.7276213410675034, 0.40378794182591365, 0.03139013277972387, -0.61940440275084674, -0.085642932210486009, 0.5869304154805447, -0.33239224847891785, 0.05807882020534267},
    {-0.25437742420970599, 1.7601589058628986, -4.0086999786335316, 4.9068960657064844, -2.9210359792014606, 0.14317172849083395, 0.3185218088298713, 0.23489042707447022, -0.13370723242467442, -0.11285727180813118, 0.076268652950218202, -0.0092297026372731416},
    {0.072013934153021042, -1.0970146283890323, 1.7276213410675034, -2.9210359792014606, 3.9569992931645892, -2.0672567202838783, -0.1199918347858694, 0.63828840573694079, 0.06458029316738767, -0.49906905314976224, 0.30836741523713196, -0.063502466716570921},
    {0.05130060266919189, 0.064685194778970917, 0.40378794182591365, 0.14317172849083395, -2.0672567202838783, 2.4777869340776641, -1.2129571921831104, -0.11028072695692277, 0.30920438272452599, 0.00044412751818195394, -0.083475892567044893, 0.023589619905674149},
    {0.021570777791221605, -0.12638600308685535, 0.03139013277972387, 0.3185218088298713, -0.1199918347858694, -1.2129571921831104, 2.3506255421138076, -1.5753657588885486, -0.090159204026899628, 0.72147751642957736, -0.38839267938816691, 0.069666894415248842},
    {-0.062950260358011545, 0.26786791846526919, -0.61940440275084674, 0.23489042707447022, 0.63828840573694079, -0.11028072695692277, -1.5753657588885486, 2.2067042341239889, -1.2211190634744122, 0.18638369599546428, 0.082328408977189668, -0.027342877944581005},
    {-0.019413272592933017, 0.13912717177504608, -0.085642932210486009, -0.13370723242467442, 0.06458029316738767, 0.30920438272452599, -0.090159204026899628, -1.2211190634744122, 2.1677164962704012, -1.6641999849773503, 0.63018392725082395, -0.096570581481429288},
    {0.067993896175440521, -0.36832945404254352, 0.5869304154805447, -0.11285727180813118, -0.49906905314976224, 0.00044412751818195394, 0.72147751642957736, 0.18638369599546428, -1.6641999849773503, 1.6891082342925223, -0.72834049300437442, 0.12045837109043069},
    {-0.037535897712038635, 0.19954689939976655, -0.33239224847891785, 0.076268652950218202, 0.30836741523713196, -0.083475892567044893, -0.38839267938816691, 0.082328408977189668, 0.63018392725082395, -0.72834049300437442, 0.3293309076597502, -0.055889000324337759},
    {0.0067359569605494069, -0.035619133642273877, 0.05807882020534267, -0.0092297026372731416, -0.063502466716570921, 0.023589619905674149, 0.069666894415248842, -0.027342877944581005, -0.096570581481429288, 0.12045837109043069, -0.055889000324337759, 0.0096241001692202351}
  },
  {
    {0.03486592914711939, -0.16528364193874998, 0.25730208080406441, -0.24708126696847094, 0.053376106428904301, 0.093850918228235228, 0.022451057746432711, -0.061560793113875432, -0.025649827369286799, 0.065464503550300507, -0.033570779292672361, 0.0058357127779989611},
    {-0.16528364193874998, 0.85818166982036825, -1.5346059543467507, 1.5654425187350043, -0.42751317657272764, -0.44172280920148499, -0.11324495880332555, 0.33156223308574462, 0.11316547797943351, -0.32428579215107556, 0.16715412412437111, -0.028849690730807294},
    {0.25730208080406441, -1.5346059543467507, 3.2614338359396498, -3.544010169328053, 1.2303734649123281, 0.58080098906586697, 0.1778494761953609, -0.56454187817320334, -0.15781560113631421, 0.51188919501805208, -0.26333879485292311, 0.04466335590192199},
    {-0.24708126696847094, 1.5654425187350043, -3.544010169328053, 4.4273300753052149, -2.4202938806705556, -0.0088900380216628116, 0.15051762253378836, 0.13726834194448334, -0.05793031296851029, 0.013131296431867339, -0.025342072705042868, 0.0098578857119370929},
    {0.053376106428904301, -0.42751317657272764, 1.2303734649123281, -2.4202938806705556, 2.7922130429052681, -1.5954804999803534, -0.050292785399327473, 0.65222977544000216, 0.077667379398188588, -0.6278632258866198, 0.39543348643660559, -0.07984968701171298},
    {0.093850918228235228, -0.44172280920148499, 0.58080098906586697, -0.0088900380216628116, -1.5954804999803534, 2.547441000339782, -1.2925890888106495, -0.17825201328915452, 0.33775383014315213, 0.042608037975255954, -0.11521049807802741, 0.029690171629040453},
    {0.022451057746432711, -0.11324495880332555, 0.1778494761953609, 0.15051762253378836, -0.050292785399327473, -1.2925890888106495, 2.3535347387135324, -1.5533253420481166, -0.097063431581866796, 0.7192868781346381, -0.38621945826303994, 0.069095291582573312},
    {-0.061560793113875432, 0.33156223308574462, -0.56454187817320334, 0.13726834194448334, 0.65222977544000216, -0.17825201328915452, -1.5533253420481166, 2.229003283126461, -1.2300970319264495, 0.17603204526727284, 0.090882071699322442, -0.029200692012487057},
    {-0.025649827369286799, 0.11316547797943351, -0.15781560113631421, -0.05793031296851029, 0.077667379398188588, 0.33775383014315213, -0.097063431581866796, -1.2300970319264495, 2.1659744804559895, -1.6552867415589849, 0.62470486664540736, -0.095423088080758389},
    {0.065464503550300507, -0.32428579215107556, 0.51188919501805208, 0.013131296431867339, -0.6278632258866198, 0.042608037975255954, 0.7192868781346381, 0.17603204526727284, -1.6552867415589849, 1.6875961237351238, -0.72938257924670724, 0.1208102587308771},
    {-0.033570779292672361, 0.16715412412437111, -0.26333879485292311, -0.025342072705042868, 0.39543348643660559, -0.11521049807802741, -0.38621945826303994, 0.090882071699322442, 0.62470486664540736, -0.72938257924670724, 0.33124556093199664, -0.056355927399290268},
    {0.0058357127779989611, -0.028849690730807294, 0.04466335590192199, 0.0098578857119370929, -0.07984968701171298, 0.029690171629040453, 0.069095291582573312, -0.029200692012487057, -0.095423088080758389, 0.1208102587308771, -0.056355927399290268, 0.0097264089007070825}
  },
  {
    {0.020136014142440081, -0.10124244323960216, 0.19099939463473878, -0.12161617746758578, -0.04415665027269234, 0.088540969444134962, 0.010825420690358734, -0.062713559939443136, -0.017437288630431008, 0.069385471505456389, -0.040524207581254502, 0.0078030567138799986},
    {-0.10124244323960216, 0.66274360714399361, -1.5443949984274483, 1.290765398872344, -0.32592865476881966, -0.15014353128435395, -0.038485910829683591, 0.29460318478272174, 0.095395800483125334, -0.34005847855795879, 0.19301848614956521, -0.036272460323883489},
    {0.19099939463473878, -1.5443949984274483, 4.0447356747810215, -3.7919574721868448, 1.7210742587168528, -0.24076996004103796, -0.077631702458962018, -0.4637871159758522, -0.12143757208791769, 0.52627335836740619, -0.2981302639917362, 0.055026398669779999},
    {-0.12161617746758578, 1.290765398872344, -3.7919574721868448, 4.0108028529675375, -2.3170871554681902, 0.49766530568634459, 0.43868351373753439, 0.12856302338925837, -0.14048447407909395, -0.021029385786019338, 0.031123469673812861, -0.0054288993390974307},
    {-0.04415665027269234, -0.32592865476881966, 1.7210742587168528, -2.3170871554681902, 3.0561763544069187, -2.2772587648159526, -0.304679851611106, 0.68276173228394077, 0.10133764614544967, -0.55975071120690945, 0.33189585738751959, -0.064384060797011172},
    {0.088540969444134962, -0.15014353128435395, -0.24076996004103796, 0.49766530568634459, -2.2772587648159526, 3.0957184368922754, -1.083224317023143, -0.2094745367426212, 0.34648005035885054, -0.012129135751616791, -0.076750394931826518, 0.021345878208946494},
    {0.010825420690358734, -0.038485910829683591, -0.077631702458962018, 0.43868351373753439, -0.304679851611106, -1.083224317023143, 2.3372626454785328, -1.6122496189970843, -0.078861484264993245, 0.73356347430086011, -0.39596791123097891, 0.070765742208665175},
    {-0.062713559939443136, 0.29460318478272174, -0.4637871159758522, 0.12856302338925837, 0.68276173228394077, -0.2094745367426212, -1.6122496189970843, 2.219533947511894, -1.2186745677789879, 0.19063938399028829, 0.076521288193306211, -0.025723160717420871},
    {-0.017437288630431008, 0.095395800483125334, -0.12143757208791769, -0.14048447407909395, 0.10133764614544967, 0.34648005035885054, -0.078861484264993245, -1.2186745677789879, 2.1650026695461291, -1.6663338394740335, 0.6318403210560396, -0.096827261274136905},
    {0.069385471505456389, -0.34005847855795879, 0.52627335836740619, -0.021029385786019338, -0.55975071120690945, -0.012129135751616791, 0.73356347430086011, 0.19063938399028829, -1.6663338394740335, 1.6837664788649205, -0.72364726456582806, 0.1193206483134344},
    {-0.040524207581254502, 0.19301848614956521, -0.2981302639917362, 0.031123469673812861, 0.33189585738751959, -0.076750394931826518, -0.39596791123097891, 0.076521288193306211, 0.6318403210560396, -0.72364726456582806, 0.32568550706238075, -0.055064887220999996},
    {0.0078030567138799986, -0.036272460323883489, 0.055026398669779999, -0.0054288993390974307, -0.064384060797011172, 0.021345878208946494, 0.070765742208665175, -0.025723160717420871, -0.096827261274136905, 0.1193206483134344, -0.055064887220999996, 0.0094390055578437923}
  },
  {
    {0.054513497245377671, -0.22806077062408253, 0.36635351937183525, -0.2573099708303016, 0.073174284765718675, 0.05961013335292676, -0.018138877661769408, -0.070286463020631657, -0.01203841115204847, 0.055545181656303177, -0.027748356262350542, 0.0043862331590226785},
    {-0.22806077062408253, 1.0344366723715379, -1.8160613030776387, 1.3947005733898592, -0.3523151115137424, -0.35778064048237179, 0.073725770430336693, 0.3605894587061832, 0.049561677808879274, -0.28302982407917493, 0.14908940250169, -0.024855905431475998},
    {0.36635351937183525, -1.8160613030776387, 3.5384751799692697, -3.1639538961573623, 1.0446160281756991, 0.50474760902097748, -0.10865591094883789, -0.54645083095104241, -0.05422926946232566, 0.4289544432413972, -0.23318037081102022, 0.039384801629048671},
    {-0.2573099708303016, 1.3947005733898592, -3.1639538961573623, 3.7750260028982621, -2.2410993769191934, 0.53198963139923283, 0.069735199957451754, -0.10947332973876302, -0.039534106994215314, 0.07454580993585995, -0.046087517912372186, 0.011460980971542415},
    {0.073174284765718675, -0.3523151115137424, 1.0446160281756991, -2.2410993769191934, 2.6515377418809911, -1.7887814185733037, 0.024133247888794614, 0.8284720798631251, 0.11771304408004521, -0.67785558536770796, 0.39690071566186003, -0.076495649942286359},
    {0.05961013335292676, -0.35778064048237179, 0.50474760902097748, 0.53198963139923283, -1.7887814185733037, 2.5389146421612048, -1.4618679335742795, -0.33472761024745179, 0.32918673259119768, 0.062291115314660389, -0.1095301276127402, 0.025947866649947266},
    {-0.018138877661769408, 0.073725770430336693, -0.10865591094883789, 0.069735199957451754, 0.024133247888794614, -1.4618679335742795, 2.5728380798942805, -1.3914003479529762, -0.17050073033603591, 0.72819624600521582, -0.38849061883715302, 0.070425875134972518},
    {-0.070286463020631657, 0.3605894587061832, -0.54645083095104241, -0.10947332973876302, 0.8284720798631251, -0.33472761024745179, -1.3914003479529762, 2.2809780281676542, -1.2664453441262384, 0.19326255150192501, 0.08273148279904935, -0.027249675000833092},
    {-0.01203841115204847, 0.049561677808879274, -0.05422926946232566, -0.039534106994215314, 0.11771304408004521, 0.32918673259119768, -0.17050073033603591, -1.2664453441262384, 2.1702587840601604, -1.6566759444167736, 0.6299520039695985, -0.097248436022243687},
    {0.055545181656303177, -0.28302982407917493, 0.4289544432413972, 0.07454580993585995, -0.67785558536770796, 0.062291115314660389, 0.72819624600521582, 0.19326255150192501, -1.6566759444167736, 1.680565723305782, -0.72614600268174345, 0.12034628558425624},
    {-0.027748356262350542, 0.14908940250169, -0.23318037081102022, -0.046087517912372186, 0.39690071566186003, -0.1095301276127402, -0.38849061883715302, 0.08273148279904935, 0.6299520039695985, -0.72614600268174345, 0.32816973174964581, -0.055660342564464046},
    {0.0043862331590226785, -0.024855905431475998, 0.039384801629048671, 0.011460980971542415, -0.076495649942286359, 0.025947866649947266, 0.070425875134972518, -0.027249675000833092, -0.097248436022243687, 0.12034628558425624, -0.055660342564464046, 0.0095579658325133984}
  },
  {
    {0.048312268924315532, -0.23575176501905301, 0.45338350656318105, -0.40467724775281777, 0.13485777845966865, -0.077214983811044843, 0.054216253998934975, 0.010120490198937414, -0.0075722363712735401, 0.048530801828809575, -0.029931071965711955, 0.0057262049460539257},
    {-0.23575176501905301, 1.1760566894069595, -2.28822660624623, 2.0049345650109243, -0.54113092178568445, 0.25713744945197453, -0.222394293808719, -0.044103452464889947, 0.0067981064718364631, -0.23681679034217576, 0.15348922120967817, -0.029992201884620949},
    {0.45338350656318105, -2.28822660624623, 4.5231662776858634, -4.0751683117967499, 1.1917249645897325, -0.43305433112971364, 0.23675039081506205, 0.15735781048043596, 0.10231031131200653, 0.32210860551467635, -0.23927053028527939, 0.04891791249701543},
    {-0.40467724775281777, 2.0049345650109243, -4.0751683117967499, 4.2631749944822763, -2.3080009456286885, 1.0389762477380295, 0.12026778628863408, -0.50867701482306882, -0.26860032145836482, 0.16553063727027495, -0.028309657433747214, 0.00054926810329842255},
    {0.13485777845966865, -0.54113092178568445, 1.1917249645897325, -2.3080009456286885, 3.2770551581617573, -2.3495397906155269, 0.012468503569159304, 0.84318915656819793, 0.070313785266931425, -0.6368686681843253, 0.37966486551224321, -0.073733885913464886},
    {-0.077214983811044843, 0.25713744945197453, -0.43305433112971364, 1.0389762477380295, -2.3495397906155269, 2.9579525047245836, -1.381974598722179, -0.34282099491713591, 0.39617521538499967, 0.017050004463880119, -0.11511243029625554, 0.032425707728388327},
    {0.054216253998934975, -0.222394293808719, 0.23675039081506205, 0.12026778628863408, 0.012468503569159304, -1.381974598722179, 2.4001385151919647, -1.4899127578782383, -0.14009737439220005, 0.71797404194559844, -0.37179848795549364, 0.064362020947476395},
    {0.010120490198937414, -0.044103452464889947, 0.15735781048043596, -0.50867701482306882, 0.84318915656819793, -0.34282099491713591, -1.4899127578782383, 2.3581869181903325, -1.2262688115239677, 0.18780156534243975, 0.083489668743923273, -0.028362577916965958},
    {-0.0075722363712735401, 0.0067981064718364631, 0.10231031131200653, -0.26860032145836482, 0.070313785266931425, 0.39617521538499967, -0.14009737439220005, -1.2262688115239677, 2.1958458962696117, -1.6478117451441601, 0.61049458259163614, -0.091587408407055704},
    {0.048530801828809575, -0.23681679034217576, 0.32210860551467635, 0.16553063727027495, -0.6368686681843253, 0.017050004463880119, 0.71797404194559844, 0.18780156534243975, -1.6478117451441601, 1.6557023409016762, -0.7102711969334341, 0.11707040333673989},
    {-0.029931071965711955, 0.15348922120967817, -0.23927053028527939, -0.028309657433747214, 0.37966486551224321, -0.11511243029625554, -0.37179848795549364, 0.083489668743923273, 0.61049458259163614, -0.7102711969334341, 0.32244104909447463, -0.054886012282033603},
    {0.0057262049460539257, -0.029992201884620949, 0.04891791249701543, 0.00054926810329842255, -0.073733885913464886, 0.032425707728388327, 0.064362020947476395, -0.028362577916965958, -0.091587408407055704, 0.11707040333673989, -0.054886012282033603, 0.009510568845168715}
  },
  {
    {0.059356655168855285, -0.2582461703014019, 0.44244130025805883, -0.36060508398781621, 0.10623199410095079, 0.025700424896265766, 0.046187186345032709, -0.048893560708222629, -0.039572684876726452, 0.049454086083517416, -0.026524633269254638, 0.0044704862907410147},
    {-0.2582461703014019, 1.1609054655952777, -2.0714949634633433, 1.7494819848562619, -0.47116415171580228, -0.24089133666076934, -0.17792007485011932, 0.27270985245680596, 0.16930418514746021, -0.24967000268308417, 0.14281585978122263, -0.025830648162508376},
    {0.44244130025805883, -2.0714949634633433, 3.9717443119776088, -3.7891749250271149, 1.3839547159848482, 0.43894741000763238, 0.12417366288936167, -0.49362761317038512, -0.19515252941248232, 0.39422310938893729, -0.25723730237545084, 0.051202822942329217},
    {-0.36060508398781621, 1.7494819848562619, -3.7891749250271149, 4.6645394183966467, -3.0495657820801942, 0.42879321975907164, 0.3032388760552065, 0.089590350888058362, -0.087126102802182775, -0.0029573152291584798, 0.077488862136516137, -0.023703502965295019},
    {0.10623199410095079, -0.47116415171580228, 1.3839547159848482, -3.0495657820801942, 3.9159732626645649, -2.2177337817745211, -0.21952520325412436, 0.64788922068448163, 0.17921366005096198, -0.47402056172345303, 0.23886164536545562, -0.04011501830316843},
    {0.025700424896265766, -0.24089133666076934, 0.43894741000763238, 0.42879321975907164, -2.2177337817745211, 2.7000231513289545, -1.1988860621890309, -0.16911620697362265, 0.29474491605304654, -0.011276992926303854, -0.070967656424236789, 0.02066291490351365},
    {0.046187186345032709, -0.17792007485011932, 0.12417366288936167, 0.3032388760552065, -0.21952520325412436, -1.1988860621890309, 2.8096857940535149, -1.5692660487973698, -0.53385617880402714, 0.69175302731168808, -0.33179502002423877, 0.056210041264106329},
    {-0.048893560708222629, 0.27270985245680596, -0.49362761317038512, 0.089590350888058362, 0.64788922068448163, -0.16911620697362265, -1.5692660487973698, 2.1857280492588731, -1.1866045607031968, 0.23781654741910219, 0.057938704042108317, -0.024164734396632758},
    {-0.039572684876726452, 0.16930418514746021, -0.19515252941248232, -0.087126102802182775, 0.17921366005096198, 0.29474491605304654, -0.53385617880402714, -1.1866045607031968, 2.5408146094850337, -1.6383430255924911, 0.58192803043868435, -0.085350318984080478},
    {0.049454086083517416, -0.24967000268308417, 0.39422310938893729, -0.0029573152291584798, -0.47402056172345303, -0.011276992926303854, 0.69175302731168808, 0.23781654741910219, -1.6383430255924911, 1.5552822098090453, -0.66135068675829911, 0.10908960490049951},
    {-0.026524633269254638, 0.14281585978122263, -0.25723730237545084, 0.077488862136516137, 0.23886164536545562, -0.070967656424236789, -0.33179502002423877, 0.057938704042108317, 0.58192803043868435, -0.66135068675829911, 0.30037744739870809, -0.051535250311215038},
    {0.0044704862907410147, -0.025830648162508376, 0.051202822942329217, -0.023703502965295019, -0.04011501830316843, 0.02066291490351365, 0.056210041264106329, -0.024164734396632758, -0.085350318984080478, 0.10908960490049951, -0.051535250311215038, 0.0090636028217103756}
  },
  {
    {0.060746635578710587, -0.28206253413177712, 0.51164899906322281, -0.41745627394206297, 0.08970855724171678, 0.055128232702233333, 0.018674198689744119, -0.045774095158397629, -0.018333618476498226, 0.057798341547141294, -0.040630737101909321, 0.010552293987876327},
    {-0.28206253413177712, 1.3678891598272613, -2.5951856072476409, 2.2488555481314294, -0.61787107856313295, -0.20359331711817599, -0.07750230766670925, 0.20517076641107559, 0.075098298535902636, -0.27011976604721144, 0.20418860186155857, -0.054867763992579879},
    {0.51164899906322281, -2.5951856072476409, 5.2020087789420417, -4.9675617982498554, 1.954822025738026, 0.032418776245126124, 0.021725002951736589, -0.22938190965620306, -0.046334957699324483, 0.3572848804726716, -0.34522590894753907, 0.10378171838773836},
    {-0.41745627394206297, 2.2488555481314294, -4.9675617982498554, 5.7583890699677536, -3.686250301816353, 1.0700746520025506, 0.2603721562722045, -0.30182513146051876, -0.16569416965740014, 0.1451770881784121, 0.12905350233585802, -0.073134341762018051},
    {0.08970855724171678, -0.61787107856313295, 1.954822025738026, -3.686250301816353, 4.2639890909267741, -2.5124057158454884, -0.06346018436488568, 0.82494561662550869, 0.13945288075681456, -0.57115195163303245, 0.17927889800881017, -0.0010578370747579462},
    {0.055128232702233333, -0.20359331711817599, 0.032418776245126124, 1.0700746520025506, -2.5124057158454884, 2.6476812995849266, -1.2390498395508887, -0.083811729662171722, 0.30592774931606481, -0.097338731383933119, 0.038147106572137851, -0.013178482862381553},
    {0.018674198689744119, -0.07750230766670925, 0.021725002951736589, 0.2603721562722045, -0.06346018436488568, -1.2390498395508887, 2.3039717414232572, -1.5988370290260472, -0.10615124451008985, 0.79946870915133639, -0.38689040091147375, 0.067679197541815672},
    {-0.045774095158397629, 0.20517076641107559, -0.22938190965620306, -0.30182513146051876, 0.82494561662550869, -0.083811729662171722, -1.5988370290260472, 2.6369639417392761, -1.2365551494921554, -0.26406528611846763, 0.11624206224536064, -0.023072056447259619},
    {-0.018333618476498226, 0.075098298535902636, -0.046334957699324483, -0.16569416965740014, 0.13945288075681456, 0.30592774931606481, -0.10615124451008985, -1.2365551494921554, 2.1662024377271383, -1.6343296052585166, 0.61433403771139139, -0.093616658953327214},
    {0.057798341547141294, -0.27011976604721144, 0.3572848804726716, 0.1451770881784121, -0.57115195163303245, -0.097338731383933119, 0.79946870915133639, -0.26406528611846763, -1.6343296052585166, 2.1293738873853716, -0.77305773424726021, 0.12096016795348848},
    {-0.040630737101909321, 0.20418860186155857, -0.34522590894753907, 0.12905350233585802, 0.17927889800881017, 0.038147106572137851, -0.38689040091147375, 0.11624206224536064, 0.61433403771139139, -0.77305773424726021, 0.31830761375741762, -0.053747041284351968},
    {0.010552293987876327, -0.054867763992579879, 0.10378171838773836, -0.073134341762018051, -0.0010578370747579462, -0.013178482862381553, 0.067679197541815672, -0.023072056447259619, -0.093616658953327214, 0.12096016795348848, -0.053747041284351968, 0.0097008045057573912}
  }
};
inline constexpr double kM6Right[9][12][12] = {
  {
    {0.0097008045057573912, -0.053747041284351968, 0.12096016795348848, -0.093616658953327214, -0.023072056447259619, 0.067679197541815672, -0.013178482862381553, -0.0010578370747579462, -0.073134341762018051, 0.10378171838773836, -0.054867763992579879, 0.010552293987876327},
    {-0.053747041284351968, 0.31830761375741762, -0.77305773424726021, 0.61433403771139139, 0.11624206224536064, -0.38689040091147375, 0.038147106572137851, 0.17927889800881017, 0.12905350233585802, -0.34522590894753907, 0.20418860186155857, -0.040630737101909321},
    {0.12096016795348848, -0.77305773424726021, 2.1293738873853716, -1.6343296052585166, -0.26406528611846763, 0.79946870915133639, -0.097338731383933119, -0.57115195163303245, 0.1451770881784121, 0.3572848804726716, -0.27011976604721144, 0.057798341547141294},
    {-0.093616658953327214, 0.61433403771139139, -1.6343296052585166, 2.1662024377271383, -1.2365551494921554, -0.10615124451008985, 0.30592774931606481, 0.13945288075681456, -0.16569416965740014, -0.046334957699324483, 0.075098298535902636, -0.018333618476498226},
    {-0.023072056447259619, 0.11624206224536064, -0.26406528611846763, -1.2365551494921554, 2.6369639417392761, -1.5988370290260472, -0.083811729662171722, 0.82494561662550869, -0.30182513146051876, -0.22938190965620306, 0.20517076641107559, -0.045774095158397629},
    {0.067679197541815672, -0.38689040091147375, 0.79946870915133639, -0.10615124451008985, -1.5988370290260472, 2.3039717414232572, -1.2390498395508887, -0.06346018436488568, 0.2603721562722045, 0.021725002951736589, -0.07750230766670925, 0.018674198689744119},
    {-0.013178482862381553, 0.038147106572137851, -0.097338731383933119, 0.30592774931606481, -0.083811729662171722, -1.2390498395508887, 2.6476812995849266, -2.5124057158454884, 1.0700746520025506, 0.032418776245126124, -0.20359331711817599, 0.055128232702233333},
    {-0.0010578370747579462, 0.17927889800881017, -0.57115195163303245, 0.13945288075681456, 0.82494561662550869, -0.06346018436488568, -2.5124057158454884, 4.2639890909267741, -3.686250301816353, 1.954822025738026, -0.61787107856313295, 0.08970855724171678},
    {-0.073134341762018051, 0.12905350233585802, 0.1451770881784121, -0.16569416965740014, -0.30182513146051876, 0.2603721562722045, 1.0700746520025506, -3.686250301816353, 5.7583890699677536, -4.9675617982498554, 2.2488555481314294, -0.41745627394206297},
    {0.10378171838773836, -0.34522590894753907, 0.3572848804726716, -0.046334957699324483, -0.22938190965620306, 0.021725002951736589, 0.032418776245126124, 1.954822025738026, -4.9675617982498554, 5.2020087789420417, -2.5951856072476409, 0.51164899906322281},
    {-0.054867763992579879, 0.20418860186155857, -0.27011976604721144, 0.075098298535902636, 0.20517076641107559, -0.07750230766670925, -0.20359331711817599, -0.61787107856313295, 2.2488555481314294, -2.5951856072476409, 1.3678891598272613, -0.28206253413177712},
    {0.010552293987876327, -0.040630737101909321, 0.057798341547141294, -0.018333618476498226, -0.045774095158397629, 0.018674198689744119, 0.055128232702233333, 0.08970855724171678, -0.41745627394206297, 0.51164899906322281, -0.28206253413177712, 0.060746635578710587}
  },
  {
    {0.0090636028217103756, -0.051535250311215038, 0.10908960490049951, -0.085350318984080478, -0.024164734396632758, 0.056210041264106329, 0.02066291490351365, -0.04011501830316843, -0.023703502965295019, 0.051202822942329217, -0.025830648162508376, 0.0044704862907410147},
    {-0.051535250311215038, 0.30037744739870809, -0.66135068675829911, 0.58192803043868435, 0.057938704042108317, -0.33179502002423877, -0.070967656424236789, 0.23886164536545562, 0.077488862136516137, -0.25723730237545084, 0.14281585978122263, -0.026524633269254638},
    {0.10908960490049951, -0.66135068675829911, 1.5552822098090453, -1.6383430255924911, 0.23781654741910219, 0.69175302731168808, -0.011276992926303854, -0.47402056172345303, -0.0029573152291584798, 0.39422310938893729, -0.24967000268308417, 0.049454086083517416},
    {-0.085350318984080478, 0.58192803043868435, -1.6383430255924911, 2.5408146094850337, -1.1866045607031968, -0.53385617880402714, 0.29474491605304654, 0.17921366005096198, -0.087126102802182775, -0.19515252941248232, 0.16930418514746021, -0.039572684876726452},
    {-0.024164734396632758, 0.057938704042108317, 0.23781654741910219, -1.1866045607031968, 2.1857280492588731, -1.5692660487973698, -0.16911620697362265, 0.64788922068448163, 0.089590350888058362, -0.49362761317038512, 0.27270985245680596, -0.048893560708222629},
    {0.056210041264106329, -0.33179502002423877, 0.69175302731168808, -0.53385617880402714, -1.5692660487973698, 2.8096857940535149, -1.1988860621890309, -0.21952520325412436, 0.3032388760552065, 0.12417366288936167, -0.17792007485011932, 0.046187186345032709},
    {0.02066291490351365, -0.070967656424236789, -0.011276992926303854, 0.29474491605304654, -0.16911620697362265, -1.1988860621890309, 2.7000231513289545, -2.2177337817745211, 0.42879321975907164, 0.43894741000763238, -0.24089133666076934, 0.025700424896265766},
    {-0.04011501830316843, 0.23886164536545562, -0.47402056172345303, 0.17921366005096198, 0.64788922068448163, -0.21952520325412436, -2.2177337817745211, 3.9159732626645649, -3.0495657820801942, 1.3839547159848482, -0.47116415171580228, 0.10623199410095079},
    {-0.023703502965295019, 0.077488862136516137, -0.0029573152291584798, -0.087126102802182775, 0.089590350888058362, 0.3032388760552065, 0.42879321975907164, -3.0495657820801942, 4.6645394183966467, -3.7891749250271149, 1.7494819848562619, -0.36060508398781621},
    {0.051202822942329217, -0.25723730237545084, 0.39422310938893729, -0.19515252941248232, -0.49362761317038512, 0.12417366288936167, 0.43894741000763238, 1.3839547159848482, -3.7891749250271149, 3.9717443119776088, -2.0714949634633433, 0.44244130025805883},
    {-0.025830648162508376, 0.14281585978122263, -0.24967000268308417, 0.16930418514746021, 0.27270985245680596, -0.17792007485011932, -0.24089133666076934, -0.47116415171580228, 1.7494819848562619, -2.0714949634633433, 1.1609054655952777, -0.2582461703014019},
    {0.0044704862907410147, -0.026524633269254638, 0.049454086083517416, -0.039572684876726452, -0.048893560708222629, 0.046187186345032709, 0.025700424896265766, 0.10623199410095079, -0.36060508398781621, 0.44244130025805883, -0.2582461703014019, 0.059356655168855285}
  },
  {
    {0.009510568845168715, -0.054886012282033603, 0.11707040333673989, -0.091587408407055704, -0.028362577916965958, 0.064362020947476395, 0.032425707728388327, -0.073733885913464886, 0.00054926810329842255, 0.04891791249701543, -0.029992201884620949, 0.0057262049460539257},
    {-0.054886012282033603, 0.32244104909447463, -0.7102711969334341, 0.61049458259163614, 0.083489668743923273, -0.37179848795549364, -0.11511243029625554, 0.37966486551224321, -0.028309657433747214, -0.23927053028527939, 0.15348922120967817, -0.029931071965711955},
    {0.11707040333673989, -0.7102711969334341, 1.6557023409016762, -1.6478117451441601, 0.18780156534243975, 0.71797404194559844, 0.017050004463880119, -0.6368686681843253, 0.16553063727027495, 0.32210860551467635, -0.23681679034217576, 0.048530801828809575},
    {-0.091587408407055704, 0.61049458259163614, -1.6478117451441601, 2.1958458962696117, -1.2262688115239677, -0.14009737439220005, 0.39617521538499967, 0.070313785266931425, -0.26860032145836482, 0.10231031131200653, 0.0067981064718364631, -0.0075722363712735401},
    {-0.028362577916965958, 0.083489668743923273, 0.18780156534243975, -1.2262688115239677, 2.3581869181903325, -1.4899127578782383, -0.34282099491713591, 0.84318915656819793, -0.50867701482306882, 0.15735781048043596, -0.044103452464889947, 0.010120490198937414},
    {0.064362020947476395, -0.37179848795549364, 0.71797404194559844, -0.14009737439220005, -1.4899127578782383, 2.4001385151919647, -1.381974598722179, 0.012468503569159304, 0.12026778628863408, 0.23675039081506205, -0.222394293808719, 0.054216253998934975},
    {0.032425707728388327, -0.11511243029625554, 0.017050004463880119, 0.39617521538499967, -0.34282099491713591, -1.381974598722179, 2.9579525047245836, -2.3495397906155269, 1.0389762477380295, -0.43305433112971364, 0.25713744945197453, -0.077214983811044843},
    {-0.073733885913464886, 0.37966486551224321, -0.6368686681843253, 0.070313785266931425, 0.84318915656819793, 0.012468503569159304, -2.3495397906155269, 3.2770551581617573, -2.3080009456286885, 1.1917249645897325, -0.54113092178568445, 0.13485777845966865},
    {0.00054926810329842255, -0.028309657433747214, 0.16553063727027495, -0.26860032145836482, -0.50867701482306882, 0.12026778628863408, 1.0389762477380295, -2.3080009456286885, 4.2631749944822763, -4.0751683117967499, 2.0049345650109243, -0.40467724775281777},
    {0.04891791249701543, -0.23927053028527939, 0.32210860551467635, 0.10231031131200653, 0.15735781048043596, 0.23675039081506205, -0.43305433112971364, 1.1917249645897325, -4.0751683117967499, 4.5231662776858634, -2.28822660624623, 0.45338350656318105},
    {-0.029992201884620949, 0.15348922120967817, -0.23681679034217576, 0.0067981064718364631, -0.044103452464889947, -0.222394293808719, 0.25713744945197453, -0.54113092178568445, 2.0049345650109243, -2.28822660624623, 1.1760566894069595, -0.23575176501905301},
    {0.0057262049460539257, -0.029931071965711955, 0.048530801828809575, -0.0075722363712735401, 0.010120490198937414, 0.054216253998934975, -0.077214983811044843, 0.13485777845966865, -0.40467724775281777, 0.45338350656318105, -0.23575176501905301, 0.048312268924315532}
  },
  {
    {0.0095579658325133984, -0.055660342564464046, 0.12034628558425624, -0.097248436022243687, -0.027249675000833092, 0.070425875134972518, 0.025947866649947266, -0.076495649942286359, 0.011460980971542415, 0.039384801629048671, -0.024855905431475998, 0.0043862331590226785},
    {-0.055660342564464046, 0.32816973174964581, -0.72614600268174345, 0.6299520039695985, 0.08273148279904935, -0.38849061883715302, -0.1095301276127402, 0.39690071566186003, -0.046087517912372186, -0.23318037081102022, 0.14908940250169, -0.027748356262350542},
    {0.12034628558425624, -0.72614600268174345, 1.680565723305782, -1.6566759444167736, 0.19326255150192501, 0.72819624600521582, 0.062291115314660389, -0.67785558536770796, 0.07454580993585995, 0.4289544432413972, -0.28302982407917493, 0.055545181656303177},
    {-0.097248436022243687, 0.6299520039695985, -1.6566759444167736, 2.1702587840601604, -1.2664453441262384, -0.17050073033603591, 0.32918673259119768, 0.11771304408004521, -0.039534106994215314, -0.05422926946232566, 0.049561677808879274, -0.01203841115204847},
    {-0.027249675000833092, 0.08273148279904935, 0.19326255150192501, -1.2664453441262384, 2.2809780281676542, -1.3914003479529762, -0.33472761024745179, 0.8284720798631251, -0.10947332973876302, -0.54645083095104241, 0.3605894587061832, -0.070286463020631657},
    {0.070425875134972518, -0.38849061883715302, 0.72819624600521582, -0.17050073033603591, -1.3914003479529762, 2.5728380798942805, -1.4618679335742795, 0.024133247888794614, 0.069735199957451754, -0.10865591094883789, 0.073725770430336693, -0.018138877661769408},
    {0.025947866649947266, -0.1095301276127402, 0.062291115314660389, 0.32918673259119768, -0.33472761024745179, -1.4618679335742795, 2.5389146421612048, -1.7887814185733037, 0.53198963139923283, 0.50474760902097748, -0.35778064048237179, 0.05961013335292676},
    {-0.076495649942286359, 0.39690071566186003, -0.67785558536770796, 0.11771304408004521, 0.8284720798631251, 0.024133247888794614, -1.7887814185733037, 2.6515377418809911, -2.2410993769191934, 1.0446160281756991, -0.3523151115137424, 0.073174284765718675},
    {0.011460980971542415, -0.046087517912372186, 0.07454580993585995, -0.039534106994215314, -0.10947332973876302, 0.069735199957451754, 0.53198963139923283, -2.2410993769191934, 3.7750260028982621, -3.1639538961573623, 1.3947005733898592, -0.2573099708303016},
    {0.039384801629048671, -0.23318037081102022, 0.4289544432413972, -0.05422926946232566, -0.54645083095104241, -0.10865591094883789, 0.50474760902097748, 1.0446160281756991, -3.1639538961573623, 3.5384751799692697, -1.8160613030776387, 0.36635351937183525},
    {-0.024855905431475998, 0.14908940250169, -0.28302982407917493, 0.049561677808879274, 0.3605894587061832, 0.073725770430336693, -0.35778064048237179, -0.3523151115137424, 1.3947005733898592, -1.8160613030776387, 1.0344366723715379, -0.22806077062408253},
    {0.0043862331590226785, -0.027748356262350542, 0.055545181656303177, -0.01203841115204847, -0.070286463020631657, -0.018138877661769408, 0.05961013335292676, 0.073174284765718675, -0.2573099708303016, 0.36635351937183525, -0.22806077062408253, 0.054513497245377671}
  },
  {
    {0.0094390055578437923, -0.055064887220999996, 0.1193206483134344, -0.096827261274136905, -0.025723160717420871, 0.070765742208665175, 0.021345878208946494, -0.064384060797011172, -0.0054288993390974307, 0.055026398669779999, -0.036272460323883489, 0.0078030567138799986},
    {-0.055064887220999996, 0.32568550706238075, -0.72364726456582806, 0.6318403210560396, 0.076521288193306211, -0.39596791123097891, -0.076750394931826518, 0.33189585738751959, 0.031123469673812861, -0.2981302639917362, 0.19301848614956521, -0.040524207581254502},
    {0.1193206483134344, -0.72364726456582806, 1.6837664788649205, -1.6663338394740335, 0.19063938399028829, 0.73356347430086011, -0.012129135751616791, -0.55975071120690945, -0.021029385786019338, 0.52627335836740619, -0.34005847855795879, 0.069385471505456389},
    {-0.096827261274136905, 0.6318403210560396, -1.6663338394740335, 2.1650026695461291, -1.2186745677789879, -0.078861484264993245, 0.34648005035885054, 0.10133764614544967, -0.14048447407909395, -0.12143757208791769, 0.095395800483125334, -0.017437288630431008},
    {-0.025723160717420871, 0.076521288193306211, 0.19063938399028829, -1.2186745677789879, 2.219533947511894, -1.6122496189970843, -0.2094745367426212, 0.68276173228394077, 0.12856302338925837, -0.4637871159758522, 0.29460318478272174, -0.062713559939443136},
    {0.070765742208665175, -0.39596791123097891, 0.73356347430086011, -0.078861484264993245, -1.6122496189970843, 2.3372626454785328, -1.083224317023143, -0.304679851611106, 0.43868351373753439, -0.077631702458962018, -0.038485910829683591, 0.010825420690358734},
    {0.021345878208946494, -0.076750394931826518, -0.012129135751616791, 0.34648005035885054, -0.2094745367426212, -1.083224317023143, 3.0957184368922754, -2.2772587648159526, 0.49766530568634459, -0.24076996004103796, -0.15014353128435395, 0.088540969444134962},
    {-0.064384060797011172, 0.33189585738751959, -0.55975071120690945, 0.10133764614544967, 0.68276173228394077, -0.304679851611106, -2.2772587648159526, 3.0561763544069187, -2.3170871554681902, 1.7210742587168528, -0.32592865476881966, -0.04415665027269234},
    {-0.0054288993390974307, 0.031123469673812861, -0.021029385786019338, -0.14048447407909395, 0.12856302338925837, 0.43868351373753439, 0.49766530568634459, -2.3170871554681902, 4.0108028529675375, -3.7919574721868448, 1.290765398872344, -0.12161617746758578},
    {0.055026398669779999, -0.2981302639917362, 0.52627335836740619, -0.12143757208791769, -0.4637871159758522, -0.077631702458962018, -0.24076996004103796, 1.7210742587168528, -3.7919574721868448, 4.0447356747810215, -1.5443949984274483, 0.19099939463473878},
    {-0.036272460323883489, 0.19301848614956521, -0.34005847855795879, 0.095395800483125334, 0.29460318478272174, -0.038485910829683591, -0.15014353128435395, -0.32592865476881966, 1.290765398872344, -1.5443949984274483, 0.66274360714399361, -0.10124244323960216},
    {0.0078030567138799986, -0.040524207581254502, 0.069385471505456389, -0.017437288630431008, -0.062713559939443136, 0.010825420690358734, 0.088540969444134962, -0.04415665027269234, -0.12161617746758578, 0.19099939463473878, -0.10124244323960216, 0.020136014142440081}
  },
  {
    {0.0097264089007070825, -0.056355927399290268, 0.1208102587308771, -0.095423088080758389, -0.029200692012487057, 0.069095291582573312, 0.029690171629040453, -0.07984968701171298, 0.0098578857119370929, 0.04466335590192199, -0.028849690730807294, 0.0058357127779989611},
    {-0.056355927399290268, 0.33124556093199664, -0.72938257924670724, 0.62470486664540736, 0.090882071699322442, -0.38621945826303994, -0.11521049807802741, 0.39543348643660559, -0.025342072705042868, -0.26333879485292311, 0.16715412412437111, -0.033570779292672361},
    {0.1208102587308771, -0.72938257924670724, 1.6875961237351238, -1.6552867415589849, 0.17603204526727284, 0.7192868781346381, 0.042608037975255954, -0.6278632258866198, 0.013131296431867339, 0.51188919501805208, -0.32428579215107556, 0.065464503550300507},
    {-0.095423088080758389, 0.62470486664540736, -1.6552867415589849, 2.1659744804559895, -1.2300970319264495, -0.097063431581866796, 0.33775383014315213, 0.077667379398188588, -0.05793031296851029, -0.15781560113631421, 0.11316547797943351, -0.025649827369286799},
    {-0.029200692012487057, 0.090882071699322442, 0.17603204526727284, -1.2300970319264495, 2.229003283126461, -1.5533253420481166, -0.17825201328915452, 0.65222977544000216, 0.13726834194448334, -0.56454187817320334, 0.33156223308574462, -0.061560793113875432},
    {0.069095291582573312, -0.38621945826303994, 0.7192868781346381, -0.097063431581866796, -1.5533253420481166, 2.3535347387135324, -1.2925890888106495, -0.050292785399327473, 0.15051762253378836, 0.1778494761953609, -0.11324495880332555, 0.022451057746432711},
    {0.029690171629040453, -0.11521049807802741, 0.042608037975255954, 0.33775383014315213, -0.17825201328915452, -1.2925890888106495, 2.547441000339782, -1.5954804999803534, -0.0088900380216628116, 0.58080098906586697, -0.44172280920148499, 0.093850918228235228},
    {-0.07984968701171298, 0.39543348643660559, -0.6278632258866198, 0.077667379398188588, 0.65222977544000216, -0.050292785399327473, -1.5954804999803534, 2.7922130429052681, -2.4202938806705556, 1.2303734649123281, -0.42751317657272764, 0.053376106428904301},
    {0.0098578857119370929, -0.025342072705042868, 0.013131296431867339, -0.05793031296851029, 0.13726834194448334, 0.15051762253378836, -0.0088900380216628116, -2.4202938806705556, 4.4273300753052149, -3.544010169328053, 1.5654425187350043, -0.24708126696847094},
    {0.04466335590192199, -0.26333879485292311, 0.51188919501805208, -0.15781560113631421, -0.56454187817320334, 0.1778494761953609, 0.58080098906586697, 1.2303734649123281, -3.544010169328053, 3.2614338359396498, -1.5346059543467507, 0.25730208080406441},
    {-0.028849690730807294, 0.16715412412437111, -0.32428579215107556, 0.11316547797943351, 0.33156223308574462, -0.11324495880332555, -0.44172280920148499, -0.42751317657272764, 1.5654425187350043, -1.5346059543467507, 0.85818166982036825, -0.16528364193874998},
    {0.0058357127779989611, -0.033570779292672361, 0.065464503550300507, -0.025649827369286799, -0.061560793113875432, 0.022451057746432711, 0.093850918228235228, 0.053376106428904301, -0.24708126696847094, 0.25730208080406441, -0.16528364193874998, 0.03486592914711939}
  },
  {
    {0.0096241001692202351, -0.055889000324337759, 0.12045837109043069, -0.096570581481429288, -0.027342877944581005, 0.069666894415248842, 0.023589619905674149, -0.063502466716570921, -0.0092297026372731416, 0.05807882020534267, -0.035619133642273877, 0.0067359569605494069},
    {-0.055889000324337759, 0.3293309076597502, -0.72834049300437442, 0.63018392725082395, 0.082328408977189668, -0.38839267938816691, -0.083475892567044893, 0.30836741523713196, 0.076268652950218202, -0.33239224847891785, 0.19954689939976655, -0.037535897712038635},
    {0.12045837109043069, -0.72834049300437442, 1.6891082342925223, -1.6641999849773503, 0.18638369599546428, 0.72147751642957736, 0.00044412751818195394, -0.49906905314976224, -0.11285727180813118, 0.5869304154805447, -0.36832945404254352, 0.067993896175440521},
    {-0.096570581481429288, 0.63018392725082395, -1.6641999849773503, 2.1677164962704012, -1.2211190634744122, -0.090159204026899628, 0.30920438272452599, 0.06458029316738767, -0.13370723242467442, -0.085642932210486009, 0.13912717177504608, -0.019413272592933017},
    {-0.027342877944581005, 0.082328408977189668, 0.18638369599546428, -1.2211190634744122, 2.2067042341239889, -1.5753657588885486, -0.11028072695692277, 0.63828840573694079, 0.23489042707447022, -0.61940440275084674, 0.26786791846526919, -0.062950260358011545},
    {0.069666894415248842, -0.38839267938816691, 0.72147751642957736, -0.090159204026899628, -1.5753657588885486, 2.3506255421138076, -1.2129571921831104, -0.1199918347858694, 0.3185218088298713, 0.03139013277972387, -0.12638600308685535, 0.021570777791221605},
    {0.023589619905674149, -0.083475892567044893, 0.00044412751818195394, 0.30920438272452599, -0.11028072695692277, -1.2129571921831104, 2.4777869340776641, -2.0672567202838783, 0.14317172849083395, 0.40378794182591365, 0.064685194778970917, 0.05130060266919189},
    {-0.063502466716570921, 0.30836741523713196, -0.49906905314976224, 0.06458029316738767, 0.63828840573694079, -0.1199918347858694, -2.0672567202838783, 3.9569992931645892, -2.9210359792014606, 1.7276213410675034, -1.0970146283890323, 0.072013934153021042},
    {-0.0092297026372731416, 0.076268652950218202, -0.11285727180813118, -0.13370723242467442, 0.23489042707447022, 0.3185218088298713, 0.14317172849083395, -2.9210359792014606, 4.9068960657064844, -4.0086999786335316, 1.7601589058628986, -0.25437742420970599},
    {0.05807882020534267, -0.33239224847891785, 0.5869304154805447, -0.085642932210486009, -0.61940440275084674, 0.03139013277972387, 0.40378794182591365, 1.7276213410675034, -4.0086999786335316, 3.7026702814655423, -1.7289975322782607, 0.26465816152747218},
    {-0.035619133642273877, 0.19954689939976655, -0.36832945404254352, 0.13912717177504608, 0.26786791846526919, -0.12638600308685535, 0.064685194778970917, -1.0970146283890323, 1.7601589058628986, -1.7289975322782607, 1.0571281716142666, -0.13216751045725217},
    {0.0067359569605494069, -0.037535897712038635, 0.067993896175440521, -0.019413272592933017, -0.062950260358011545, 0.021570777791221605, 0.05130060266919189, 0.072013934153021042, -0.25437742420970599, 0.26465816152747218, -0.13216751045725217, 0.022171036053044758}
  },
  {
    {0.0099012574408575676, -0.057178650765741551, 0.12180679904794155, -0.094811267368618432, -0.030197429747494349, 0.06631789995194709, 0.031417523238170729, -0.066346971975936544, -0.012905259496763003, 0.059812240339574045, -0.034647498267327437, 0.0068313576033903435},
    {-0.057178650765741551, 0.33554751912052755, -0.73556570690121781, 0.62355191687378952, 0.09426077837778149, -0.37450620832697329, -0.11173151369641356, 0.31151125319859496, 0.099663061485020632, -0.34483413363338289, 0.19897239822578872, -0.039690713957773772},
    {0.12180679904794155, -0.73556570690121781, 1.6980723705519472, -1.6564718620463601, 0.17447115197558904, 0.7040083504639546, 0.019866697508712255, -0.47844436837071391, -0.17560354827769054, 0.61816797146739122, -0.37201548718702931, 0.081707631767475919},
    {-0.094811267368618432, 0.62355191687378952, -1.6564718620463601, 2.1690833635933693, -1.2319156063903067, -0.096686468472726564, 0.33779748443612134, 0.060695014968740357, -0.086346928045668597, -0.080604507463218414, 0.11202240924795273, -0.056313549333074621},
    {-0.030197429747494349, 0.09426077837778149, 0.17447115197558904, -1.2319156063903067, 2.2186578681095792, -1.5416486569167929, -0.12767551439410213, 0.55437782418153447, 0.25611221823957564, -0.69543472070830514, 0.35289816059807982, -0.023906073325138652},
    {0.06631789995194709, -0.37450620832697329, 0.7040083504639546, -0.096686468472726564, -1.5416486569167929, 2.3562399602695647, -1.2892443986977389, -0.066721871540788832, 0.27119126910310054, 0.066345785121966733, -0.14998932383508545, 0.054693662879572322},
    {0.031417523238170729, -0.11173151369641356, 0.019866697508712255, 0.33779748443612134, -0.12767551439410213, -1.2892443986977389, 2.4995090450956035, -1.8762919460373999, 0.36248086746643243, 0.42621267783138023, -0.19879490693808743, -0.073546015812678389},
    {-0.066346971975936544, 0.31151125319859496, -0.47844436837071391, 0.060695014968740357, 0.55437782418153447, -0.066721871540788832, -1.8762919460373999, 3.6849091578844368, -3.6083312005427413, 1.8192590279878342, -0.58189498985071397, 0.24727907009715311},
    {-0.012905259496763003, 0.099663061485020632, -0.17560354827769054, -0.086346928045668597, 0.25611221823957564, 0.27119126910310054, 0.36248086746643243, -3.6083312005427413, 6.0709050498656145, -4.4527515969581222, 1.7690654092442109, -0.49347934208296873},
    {0.059812240339574045, -0.34483413363338289, 0.61816797146739122, -0.080604507463218414, -0.69543472070830514, 0.066345785121966733, 0.42621267783138023, 1.8192590279878342, -4.4527515969581222, 4.1621504084262035, -1.7659668208461563, 0.1876436684348354},
    {-0.034647498267327437, 0.19897239822578872, -0.37201548718702931, 0.11202240924795273, 0.35289816059807982, -0.14998932383508545, -0.19879490693808743, -0.58189498985071397, 1.7690654092442109, -1.7659668208461563, 0.85516697296547572, -0.1848163233571081},
    {0.0068313576033903435, -0.039690713957773772, 0.081707631767475919, -0.056313549333074621, -0.023906073325138652, 0.054693662879572322, -0.073546015812678389, 0.24727907009715311, -0.49347934208296873, 0.1876436684348354, -0.1848163233571081, 0.29359662708631523}
  },
  {
    {0.010693301624999355, -0.060855256524311258, 0.12709904595237875, -0.095289305612639277, -0.033551293603618158, 0.064083802573145374, 0.038746437324656394, -0.074026847440399904, -0.00054964464559280324, 0.044517534050372891, -0.025220324738725281, 0.0043525510397338912},
    {-0.060855256524311258, 0.35265932651521525, -0.76039449677010496, 0.62606375223631372, 0.1110330042844844, -0.36547743760255152, -0.14915987305227446, 0.3526143542339632, 0.03977198017935462, -0.27091367589200444, 0.15085413812237441, -0.026195815730459055},
    {0.12709904595237875, -0.76039449677010496, 1.735239745025918, -1.6619985590522224, 0.14622901814259304, 0.69716880251201385, 0.080062366853188932, -0.54565993144167702, -0.090381442373678136, 0.50937728212463573, -0.28439146517022879, 0.047649634197182926},
    {-0.095289305612639277, 0.62606375223631372, -1.6619985590522224, 2.1711066099043514, -1.2185005843492234, -0.10718218357795503, 0.32416753373764501, 0.059610225611546497, -0.071532720307474415, -0.074406203862848339, 0.043231005599548962, 0.0047304296729571635},
    {-0.033551293603618158, 0.1110330042844844, 0.14622901814259304, -1.2185005843492234, 2.2241331876114168, -1.5384676547152485, -0.14978884795591421, 0.59237107797178312, 0.22301841357987376, -0.66021865028389426, 0.39874418295239522, -0.095001853634647776},
    {0.064083802573145374, -0.36547743760255152, 0.69716880251201385, -0.10718218357795503, -1.5384676547152485, 2.3729970200636066, -1.2954899391280819, -0.026513948031225417, 0.17226181060655546, 0.13340056383371432, -0.13279953352922161, 0.026018696995248499},
    {0.038746437324656394, -0.14915987305227446, 0.080062366853188932, 0.32416753373764501, -0.14978884795591421, -1.2954899391280819, 2.4876210743459399, -1.8570020888723393, 0.33952831728215643, 0.43774978862190783, -0.30975951639386434, 0.053324747236979657},
    {-0.074026847440399904, 0.3526143542339632, -0.54565993144167702, 0.059610225611546497, 0.59237107797178312, -0.026513948031225417, -1.8570020888723393, 3.5646263295443688, -3.5256158922664427, 1.9347501309833404, -0.61821556823260615, 0.14306215793968835},
    {-0.00054964464559280324, 0.03977198017935462, -0.090381442373678136, -0.071532720307474415, 0.22301841357987376, 0.17226181060655546, 0.33952831728215643, -3.5256158922664427, 6.3859450295051339, -5.1781556347228657, 2.0308587345147204, -0.32514895135174138},
    {0.044517534050372891, -0.27091367589200444, 0.50937728212463573, -0.074406203862848339, -0.66021865028389426, 0.13340056383371432, 0.43774978862190783, 1.9347501309833404, -5.1781556347228657, 4.9604250582842582, -2.3894186601125096, 0.55289246697589278},
    {-0.025220324738725281, 0.15085413812237441, -0.28439146517022879, 0.043231005599548962, 0.39874418295239522, -0.13279953352922161, -0.30975951639386434, -0.61821556823260615, 2.0308587345147204, -2.3894186601125096, 2.394840506333253, -1.2587234993451364},
    {0.0043525510397338912, -0.026195815730459055, 0.047649634197182926, 0.0047304296729571635, -0.095001853634647776, 0.026018696995248499, 0.053324747236979657, 0.14306215793968835, -0.32514895135174138, 0.55289246697589278, -1.2587234993451364, 0.87303943600430123}
  }
};
inline constexpr double kM6Kernel[7][7] = {
  {0.0055555555555555558, -0.025000000000000001, 0.050000000000000003, -0.030555555555555555, 0, 0, 0},
  {-0.025000000000000001, 0.125, -0.29999999999999999, 0.17499999999999999, 0.025000000000000001, 0, 0},
  {0.050000000000000003, -0.29999999999999999, 0.94999999999999996, -0.42499999999999999, -0.29999999999999999, 0.025000000000000001, 0},
  {-0.030555555555555555, 0.17499999999999999, -0.42499999999999999, 0.56111111111111112, -0.42499999999999999, 0.17499999999999999, -0.030555555555555555},
  {0, 0.025000000000000001, -0.29999999999999999, -0.42499999999999999, 0.94999999999999996, -0.29999999999999999, 0.050000000000000003},
  {0, 0, 0.025000000000000001, 0.17499999999999999, -0.29999999999999999, 0.125, -0.025000000000000001},
  {0, 0, 0, -0.030555555555555555, 0.050000000000000003, -0.025000000000000001, 0.0055555555555555558}
};

inline constexpr int kInterpE2 = 10, kInterpS2 = 7, kInterpWe2 = 2, kInterpWo2 = 2;
inline constexpr double kInterpEdge2[10][7] = {
  {0.97655918911288564, -0.16668384874944253, 0.36626139409617769, 0.11077980006275276, -0.5114571139641837, 0.19959336042529718, 0.024947219016513023},
  {0.23920225790533883, 0.82269805668986717, 0.099512188394082671, 0.038956928079943318, -0.15395835008308081, -0.25570666853136798, 0.20929558754521685},
  {0.031080670864059266, 0.78208511059330876, 0.60646643664072142, -0.63141586310266717, -0.031612199430303425, 0.43469666345482338, -0.19130081901994223},
  {0.23300911476712921, 0.44287237693140169, -0.36352806992090825, 0.64649596944662846, 0.19282002036460918, 0.016567757354745673, -0.16823716894360591},
  {-0.18945357266029136, 0.6148857680086719, 0.25185780494839821, 0.40760982417326297, -0.041030392392526795, -0.085907311609939516, 0.042037879532424632},
  {0.15842568829921383, -0.25482415027939803, 0.5512552633999428, 0.30137566031560181, 0.33519761695931066, 0.044023353136509277, -0.13545343183118036},
  {-0.068495483962855652, 0.15435533478678726, 0.12569177738702786, 0.32780278102413707, 0.7463199041803843, -0.33961903113809339, 0.053944717722612549},
  {-0.16112285044864674, -0.084984496236292562, 0.60446765342210129, 0.57308151826468701, -0.20436275623404121, 0.16326992785895955, 0.10965100337323262},
  {0.12927677669860246, -0.31537406342543073, 0.18557738492727663, 0.0075931147957310693, 1.0783453298244177, -0.1205698868095964, 0.03515134398899921},
  {-0.065887951719312637, 0.23935897920581659, -0.35140913750792208, 0.25057594002546774, 0.32645648870265404, 0.69952856683677, -0.09862288554347369}
};
inline constexpr double kInterpEv2[5] = {-0.0078125000000035718, 0.031250000000014967, 0.95312499999997724, 0.031250000000014967, -0.0078125000000035718};
inline constexpr double kInterpOd2[6] = {5.6785290449920757e-17, -0.0625, 0.56249999999999989, 0.56249999999999989, -0.0625, 5.6785290449920757e-17};

inline constexpr int kInterpE3 = 12, kInterpS3 = 9, kInterpWe3 = 4, kInterpWo3 = 4;
inline constexpr double kInterpEdge3[12][9] = {
  {0.82155407995355256, 0.29912920499766837, 0.077768226123308387, -0.035205758709366236, -0.46728287869359458, 0.18927392708453822, 0.13618214250148319, 0.072027810712679247, -0.093446753970269178},
  {0.11973109394834401, 1.1328905548030359, 0.17782534054803809, -0.35730528385651777, -0.43117441274838952, 0.072632999384465269, 0.50664792726416807, -0.17500546090181618, -0.046242758441327823},
  {0.31237584750172964, 0.20848384425928143, 0.4786120543755229, -0.012244580895434671, 0.20351847807100898, -0.053851200011852472, -0.24097673456233007, 0.060590045271410903, 0.043492245990663383},
  {0.22260550494770356, 0.29691626096865298, -0.29521159065843899, 0.8287722608209761, 0.42219017734122799, -0.11772891538014188, -0.63269868511752736, 0.19797378049412262, 0.077181206583424894},
  {0.051854982139531526, 0.18234308549193909, 0.30428649619811027, 0.23102705526044803, 0.62714934812361955, -0.19048486109279295, -0.34715379627707432, 0.085069074287321605, 0.055908615868897123},
  {-0.022489135759832329, 0.16339560827520827, 0.17660105917497332, 0.47204754605584642, 0.45662161021442771, -0.10093777199731752, -0.23301966598174467, 0.058665949920859897, 0.029114800097578913},
  {-0.10229695834305862, 0.16100119938257976, 0.23707339589478899, 0.43042209217772209, 0.25682588922072946, 0.020595292265074634, 0.020226574252810978, -0.012726147374697376, -0.011121337475949931},
  {-0.14681644312585079, 0.15645996127300149, 0.25928974154758655, 0.38053942518363282, 0.034208187790924778, 0.18010033654083435, 0.25991070937261196, -0.076078938639313823, -0.04761297994342735},
  {-0.14963990767816998, 0.13434332699122528, 0.241215685177946, 0.29637499755423574, -0.11498683250664722, 0.34970203620994467, 0.42753718137153057, -0.11668626769837766, -0.067860219421687337},
  {-0.10030995016412769, 0.07689551742993013, 0.15903694165321267, 0.18649384913063774, -0.10987841011973563, 0.50735041525189417, 0.45559933742520337, -0.11621619639610087, -0.058971504210913885},
  {0.011630831289671129, -0.033639246680244754, -0.011060774064283916, 0.059461020138448922, 0.13041421591442875, 0.63099549783043274, 0.2765905247762413, -0.056336786563693071, -0.0080552826410010703},
  {0.1966398384992748, -0.21501674442888039, -0.2928917470332138, -0.076158449695959723, 0.68677180719995146, 0.6985873078754461, -0.17699590934145853, 0.081283899943818433, 0.097779996981021716}
};
inline constexpr double kInterpEv3[9] = {5.6470754759195378e-16, 0.0021484375001742518, -0.012890625001029658, 0.032226562502539156, 0.95703124999663136, 0.032226562502539156, -0.012890625001029658, 0.0021484375001742518, 5.6470754759195378e-16};
inline constexpr double kInterpOd3[10] = {-1.5213231752299349e-16, -4.406082982754824e-16, 0.011718750000012138, -0.097656250000032724, 0.58593750000002121, 0.58593750000002121, -0.097656250000032724, 0.011718750000012138, -4.406082982754824e-16, -1.5213231752299349e-16};

} // namespace elastiq::coeffs
