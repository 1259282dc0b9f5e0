"""Chebyshev tables for the remainder functions of the asymptotic Z
evaluator, on the fractional-part variable p in [0, 1] mapped to
u = 2p - 1. Generated by tools/gen_rs_coeffs.py; do not edit by hand.
"""

import numpy as np

RS_CHEB_COEFFS = [
    # C_0
    np.array([
        np.float64(0.6426672862397683),
        np.float64(9.663251085739613e-17),
        np.float64(0.27197299999785485),
        np.float64(2.8506590702931856e-16),
        np.float64(0.010738605819340283),
        np.float64(-3.865300434295845e-17),
        np.float64(-0.0013743815296339064),
        np.float64(-7.730600868591689e-17),
        np.float64(-0.00012468221880337357),
        np.float64(8.69692597716565e-17),
        np.float64(-5.764599706183841e-07),
        np.float64(-2.898975325721883e-17),
        np.float64(2.728067428418929e-07),
        np.float64(6.039531928587258e-17),
        np.float64(8.077952970889586e-09),
        np.float64(3.502928518580609e-16),
        np.float64(-2.0884609608169422e-10),
        np.float64(-2.4158127714349028e-17),
        np.float64(-1.3115466862622259e-11),
        np.float64(1.4494876628609418e-16),
        np.float64(-1.4016545699865308e-14),
        np.float64(1.207906385717451e-16),
        np.float64(1.0470132551398865e-14),
        np.float64(1.5642387695040995e-16),
        np.float64(3.1888728582940686e-16),
        np.float64(2.449030197042132e-16),
        np.float64(1.5461201737183379e-16),
        np.float64(1.1595901302887527e-16),
        np.float64(2.995607836579277e-16),
        np.float64(1.0327599597884205e-16),
        np.float64(-6.039531928587254e-17),
        np.float64(-2.059480387648255e-16),
        np.float64(9.738745234846953e-17),
        np.float64(-4.686676776583712e-16),
        np.float64(-1.4978039182896407e-16),
        np.float64(-4.8316255428698094e-17),
        np.float64(7.247438314304716e-17),
        np.float64(9.784041724311364e-17),
        np.float64(-3.3338216245801664e-16),
        np.float64(-6.039531928587261e-18),
        np.float64(-5.314788097156796e-17),
        np.float64(1.1233529387172301e-16),
        np.float64(-1.6910689400044333e-17),
        np.float64(-5.797950651443771e-17),
        np.float64(-2.7842242190787253e-16),
        np.float64(-9.663251085739614e-17),
        np.float64(2.174231494291413e-17),
        np.float64(-1.304538896574848e-16),
        np.float64(-8.334554061450412e-17),
        np.float64(-6.613287461803046e-17),
        np.float64(-8.213763422878662e-17),
        np.float64(-1.5883968972184478e-16),
        np.float64(-2.2708640051488095e-16),
        np.float64(-3.3096634968658176e-16),
        np.float64(-6.764275760017728e-17),
        np.float64(-5.797950651443771e-17),
        np.float64(-1.304538896574848e-16),
        np.float64(-3.865300434295849e-17),
        np.float64(-4.3484629885828264e-17),
        np.float64(1.0146413640026592e-16),
        np.float64(-1.7635433231474783e-16),
        np.float64(2.6065298656173205e-16),
        np.float64(-4.131039839153681e-16),
        np.float64(4.318265328939882e-17),
        np.float64(-5.5082487277683795e-17),
    ]),
    # C_1
    np.array([
        np.float64(-1.8628849759552011e-19),
        np.float64(0.010697913921002994),
        np.float64(-8.230596108052058e-19),
        np.float64(0.01717065124337784),
        np.float64(3.5029285185806096e-17),
        np.float64(0.002793211149788445),
        np.float64(-5.4733258102822025e-19),
        np.float64(-3.637565371928211e-05),
        np.float64(2.11383617500554e-18),
        np.float64(-2.7108955231154544e-05),
        np.float64(6.6434851214459835e-18),
        np.float64(-1.0483749866587027e-06),
        np.float64(3.0197659642936286e-18),
        np.float64(5.886467165054582e-08),
        np.float64(1.449487662860942e-17),
        np.float64(4.322967257648428e-09),
        np.float64(6.039531928587258e-18),
        np.float64(-1.1369581922927583e-11),
        np.float64(-1.268301705003324e-17),
        np.float64(-6.6998188555098805e-12),
        np.float64(5.1336021392991694e-18),
        np.float64(-1.0079148353171948e-13),
        np.float64(-8.153368103592794e-18),
        np.float64(5.162440904258173e-15),
        np.float64(3.9256957535817135e-18),
        np.float64(1.5068632161825202e-16),
        np.float64(5.133602139299169e-18),
        np.float64(4.8316255428698035e-18),
        np.float64(-8.455344700022153e-18),
        np.float64(-7.549414910734068e-18),
        np.float64(-1.207906385717451e-17),
        np.float64(8.45534470002216e-18),
        np.float64(-4.4541547973331025e-18),
        np.float64(2.7932835169716065e-17),
        np.float64(-4.514550116618977e-17),
        np.float64(-9.77649230940063e-18),
        np.float64(-2.468658675810044e-17),
        np.float64(-4.94486676653082e-18),
        np.float64(1.4041911733965374e-17),
        np.float64(-3.623719157152356e-18),
        np.float64(1.955298461880128e-17),
        np.float64(-1.63067362071856e-17),
        np.float64(5.737555332157898e-18),
        np.float64(-6.039531928587262e-18),
        np.float64(-4.22767235001108e-18),
        np.float64(2.355417452149031e-17),
        np.float64(5.6620611830505545e-18),
        np.float64(6.039531928587259e-19),
        np.float64(-1.0267204278598334e-17),
        np.float64(-3.0197659642936286e-18),
        np.float64(9.21028619109556e-18),
        np.float64(8.530838849129497e-18),
        np.float64(-1.842057238219114e-17),
        np.float64(1.2683017050033243e-17),
        np.float64(-1.6306736207185594e-17),
        np.float64(1.2079063857174523e-17),
        np.float64(-1.5098829821468147e-18),
        np.float64(7.54941491073408e-19),
        np.float64(1.2381040453603881e-17),
        np.float64(-1.811859578576177e-18),
        np.float64(5.284590437513847e-18),
        np.float64(-9.814239383954287e-18),
        np.float64(1.3286970242891956e-17),
        np.float64(-2.1138361750055366e-18),
        np.float64(-1.7213277274276186e-18),
    ]),
    # C_2
    np.array([
        np.float64(0.0031461158539889127),
        np.float64(-1.0191710129490998e-18),
        np.float64(-0.002308783884530749),
        np.float64(-1.05691808750277e-18),
        np.float64(5.7698207666899175e-05),
        np.float64(9.814239383954293e-19),
        np.float64(0.00035238862023666056),
        np.float64(7.926885656270775e-19),
        np.float64(2.5246667458685102e-05),
        np.float64(6.039531928587257e-19),
        np.float64(-3.4428211971930994e-06),
        np.float64(1.3588946839321329e-18),
        np.float64(-3.535074556622959e-07),
        np.float64(7.549414910734073e-20),
        np.float64(3.730830184186409e-09),
        np.float64(-2.38750246551965e-18),
        np.float64(1.27769518650455e-09),
        np.float64(0.0),
        np.float64(2.1874615192976328e-11),
        np.float64(-9.814239383954292e-19),
        np.float64(-1.9141415808407977e-12),
        np.float64(0.0),
        np.float64(-6.563031006742287e-14),
        np.float64(-8.209988715423303e-19),
        np.float64(1.2581099948738318e-15),
        np.float64(-1.6679488568403084e-18),
        np.float64(8.130719858860594e-17),
        np.float64(-1.5098829821468136e-19),
        np.float64(-3.47273085893767e-18),
        np.float64(-1.6419977430846598e-18),
        np.float64(-9.625504011185938e-19),
        np.float64(1.3848457976877814e-18),
        np.float64(-2.189330324112881e-18),
        np.float64(3.585972082598685e-18),
        np.float64(-2.831030591525278e-20),
        np.float64(2.642295218756927e-19),
        np.float64(-2.113836175005542e-18),
        np.float64(-1.4438256016778922e-18),
        np.float64(1.2079063857174517e-18),
        np.float64(8.681827147344188e-19),
        np.float64(3.7747074553670424e-19),
        np.float64(-7.360679537965722e-19),
        np.float64(-1.5098829821468153e-19),
        np.float64(-6.228267301355613e-19),
        np.float64(1.6962591627555615e-18),
        np.float64(7.17194416519737e-19),
        np.float64(-5.378958123898027e-19),
        np.float64(2.378065696881233e-18),
        np.float64(1.077561018899308e-18),
        np.float64(3.44442055302242e-19),
        np.float64(1.2079063857174505e-18),
        np.float64(1.4700716144534893e-18),
        np.float64(6.841657262852754e-19),
        np.float64(1.8118595785761777e-18),
        np.float64(-8.681827147344182e-19),
        np.float64(-3.7747074553670386e-19),
        np.float64(-1.434388833039474e-18),
        np.float64(-1.698618354915168e-19),
        np.float64(-2.3403186223275628e-18),
        np.float64(-1.5098829821468143e-18),
        np.float64(3.774707455367034e-19),
        np.float64(-4.081402436115605e-18),
        np.float64(1.7363654294688352e-18),
        np.float64(-6.228267301355599e-19),
        np.float64(-1.0758298296422617e-18),
    ]),
    # C_3
    np.array([
        np.float64(-9.106100704511827e-21),
        np.float64(7.123256221203876e-05),
        np.float64(-1.117437944639804e-19),
        np.float64(0.00023234305298164786),
        np.float64(3.4444205530224205e-19),
        np.float64(-0.00012929912045472495),
        np.float64(-1.2754382612861274e-20),
        np.float64(1.80744964136714e-05),
        np.float64(-6.605738046892313e-20),
        np.float64(6.526185187220364e-06),
        np.float64(1.3447395309745067e-19),
        np.float64(-1.1696365378508225e-07),
        np.float64(-9.43676863841759e-21),
        np.float64(-7.34947612653831e-08),
        np.float64(6.133899614971435e-20),
        np.float64(-1.7750910078849617e-09),
        np.float64(3.7747074553670364e-20),
        np.float64(2.5555529625309547e-10),
        np.float64(2.3591921596043973e-20),
        np.float64(1.1376636634115986e-11),
        np.float64(2.0407012180578039e-19),
        np.float64(-3.3498619401657566e-13),
        np.float64(-7.549414910734069e-20),
        np.float64(-2.5537217083167375e-14),
        np.float64(4.71838431920879e-21),
        np.float64(6.752833678043645e-17),
        np.float64(8.49309177457583e-20),
        np.float64(2.981075212876115e-17),
        np.float64(-1.038044550225934e-19),
        np.float64(1.887353727683517e-19),
        np.float64(-2.831030591525276e-19),
        np.float64(-9.436768638417591e-21),
        np.float64(2.5951113755648373e-20),
        np.float64(2.5951113755648373e-19),
        np.float64(-4.506057024844402e-19),
        np.float64(-9.436768638417596e-20),
        np.float64(-2.406376002796488e-19),
        np.float64(-6.133899614971437e-20),
        np.float64(2.028905257259782e-19),
        np.float64(1.1324122366101113e-19),
        np.float64(2.3591921596044016e-19),
        np.float64(-1.3683314525705509e-19),
        np.float64(8.021253342654957e-20),
        np.float64(-2.076089100451871e-19),
        np.float64(0.0),
        np.float64(3.0197659642936296e-19),
        np.float64(-1.2267799229942867e-19),
        np.float64(-1.8873537276835185e-20),
        np.float64(2.3591921596043964e-20),
        np.float64(-1.0380445502259348e-19),
        np.float64(1.259218815188846e-19),
        np.float64(2.831030591525275e-20),
        np.float64(-1.3211476093784628e-19),
        np.float64(-4.718384319208796e-21),
        np.float64(-1.6042506685309902e-19),
        np.float64(9.436768638417596e-20),
        np.float64(-9.436768638417592e-20),
        np.float64(1.085228393418024e-19),
        np.float64(4.482465103248356e-20),
        np.float64(1.0380445502259348e-19),
        np.float64(4.718384319208792e-20),
        np.float64(-1.085228393418022e-19),
        np.float64(1.8401698844914286e-19),
        np.float64(0.0),
        np.float64(-2.689574574105654e-20),
    ]),
    # C_4
    np.array([
        np.float64(0.00016765745246697435),
        np.float64(-8.021253342654952e-20),
        np.float64(-0.0002272876894341701),
        np.float64(-1.4626991389547265e-19),
        np.float64(6.477387188445974e-05),
        np.float64(1.6986183549151663e-19),
        np.float64(-8.492200500126189e-06),
        np.float64(1.5570668253389021e-19),
        np.float64(-2.616140724521625e-06),
        np.float64(5.49986672207775e-20),
        np.float64(8.336764968733316e-07),
        np.float64(9.436768638417589e-20),
        np.float64(6.324704037550615e-08),
        np.float64(0.0),
        np.float64(-1.0059949402979972e-08),
        np.float64(-2.406376002796485e-19),
        np.float64(-7.822677203746003e-10),
        np.float64(5.662061183050553e-20),
        np.float64(3.167658278122916e-11),
        np.float64(-1.0380445502259348e-19),
        np.float64(3.500694420226076e-12),
        np.float64(-3.7747074553670346e-20),
        np.float64(-1.4315002381592533e-14),
        np.float64(-9.436768638417589e-20),
        np.float64(-7.26951563453428e-15),
        np.float64(-2.1468648652400009e-19),
        np.float64(-8.78280057177525e-17),
        np.float64(-4.246545887287913e-20),
        np.float64(7.738150283502417e-18),
        np.float64(-1.4862910605507695e-19),
        np.float64(1.3417905407750005e-19),
        np.float64(1.7222102765112102e-19),
        np.float64(-1.84016988449143e-19),
        np.float64(3.633155925790772e-19),
        np.float64(1.887353727683519e-19),
        np.float64(-1.4155152957626394e-20),
        np.float64(-2.3591921596043997e-19),
        np.float64(-1.4155152957626394e-19),
        np.float64(2.028905257259782e-19),
        np.float64(1.6661794627206066e-19),
        np.float64(5.662061183050564e-20),
        np.float64(-2.8310305915252776e-20),
        np.float64(-4.4972100542458855e-20),
        np.float64(4.718384319208798e-21),
        np.float64(1.734006237309232e-19),
        np.float64(3.774707455367037e-20),
        np.float64(-7.785334126694512e-20),
        np.float64(1.5570668253389026e-19),
        np.float64(1.2533208347898356e-19),
        np.float64(1.2031880013982425e-19),
        np.float64(8.493091774575823e-20),
        np.float64(1.6278425901270334e-19),
        np.float64(2.530233591175717e-19),
        np.float64(1.7222102765112105e-19),
        np.float64(1.4155152957626382e-20),
        np.float64(1.887353727683519e-20),
        np.float64(-1.1795960798021989e-19),
        np.float64(3.89266706334726e-20),
        np.float64(-2.170456786836046e-19),
        np.float64(-2.0289052572597815e-19),
        np.float64(-1.769394119703297e-21),
        np.float64(-3.1259296114758244e-19),
        np.float64(2.848724532722308e-19),
        np.float64(7.31349569477362e-20),
        np.float64(-5.379149148211308e-20),
    ]),
]
