// Generated by scripts/reference_values.py (mpmath, 40 digits).
// (z, Ai(z), Ai'(z))
pub const AIRY: &[((f64, f64), (f64, f64), (f64, f64))] = &[
    ((0.5, 0.0), (0.23169360648083348, 0.0), (-0.2249105326646839, 0.0)),
    ((0.3535533905932738, 0.3535533905932738), (0.259636737581611, -0.08630436984789636), (-0.25145448330891534, 0.0365475535257297)),
    ((1.0335160549131994e-43, 0.5), (0.3536492233751019, -0.1368020542285243), (-0.30314078016520546, 0.011153850054972977)),
    ((-0.2408768370508577, 0.4381533400219318), (0.42535954054623065, -0.11509434219401875), (-0.2936352826828368, -0.037085744441326764)),
    ((-0.2545207078751857, 0.43037101350197177), (0.42905109311945444, -0.11229559361723981), (-0.29120220631260707, -0.03956184262534413)),
    ((-0.4755282581475768, 0.15450849718747367), (0.4733281032980833, -0.032756467611529026), (-0.21656120533539827, -0.03438694748013306)),
    ((-0.5, 2.0670321098263988e-43), (0.4757280916105396, -4.2184336561885057e-44), (-0.20408167033954738, -4.916726204527098e-44)),
    ((3.0, 0.0), (0.006591139357460719, 0.0), (-0.011912976705951319, 0.0)),
    ((2.1213203435596424, 2.1213203435596424), (-0.05482388456639702, 0.013344178097326574), (0.0992212488125826, 0.011416965365389296)),
    ((6.201096329479196e-43, 3.0), (-2.3904258750513376, -0.783691997571417), (2.061931212047108, 3.6830906825201297)),
    ((-1.445261022305146, 2.6289200401315904), (5.678490414556173, -4.103179856023303), (-10.505377286950427, -4.536961736761942)),
    ((-1.5271242472511142, 2.582226081011831), (6.249390873374713, -3.1889037388246386), (-9.577225688581375, -6.285594905743447)),
    ((-2.853169548885461, 0.927050983124842), (-0.7642899894713988, 0.6971434642999892), (1.431647540290266, 1.056123161957801)),
    ((-3.0, 1.2402192658958393e-42), (-0.37881429367765806, 3.901528513205561e-43), (0.3145837692165988, 1.4094383556472677e-42)),
    ((7.9, 0.0), (6.239640097283934e-08, 0.0), (-1.7729958329430335e-07, 0.0)),
    ((5.586143571373726, 5.586143571373726), (0.000154606395236883, -0.0005611233157222349), (-0.000996426783068173, 0.0013068456316038645)),
    ((1.6329553667628552e-42, 7.9), (-822.4912847017865, 5876.240425015356), (13124.410439127074, -10074.749439587144)),
    ((-3.8058540254035513, 6.922822772346522), (249798.92981000227, -375010.0270606457), (-1250020.8909534053, -66523.68288457193)),
    ((-4.021427184427934, 6.799862013331155), (433655.61026449484, -131195.97863289888), (-913326.6706758222, -866063.4141981811)),
    ((-7.513346478731714, 2.441234255562084), (139.2596435868092, -12.283088618546078), (-90.9428991035574, -380.3063540075947)),
    ((-7.9, 3.2659107335257104e-42), (0.041701883617386706, 3.070096517229716e-42), (0.9400429980262802, -1.0759375715826818e-42)),
    ((8.1, 0.0), (3.5224356235735714e-08, 0.0), (-1.0130972032660844e-07, 0.0)),
    ((5.727564927611034, 5.727564927611034), (-0.00011701994624363286, -0.0004509175300471833), (-0.0001713378355273773, 0.0013205944516518234)),
    ((1.674296008959383e-42, 8.1), (2270.2223809057314, 8497.500041037947), (12263.422309344269, -21603.74430966616)),
    ((-3.9022047602238943, 7.098084108355295), (425138.73327380605, -663503.0124924442), (-2216345.51092964, -78509.58461270007)),
    ((-4.1232354675780085, 6.9720104187319425), (760573.6167522866, -222740.5962606451), (-1604742.70149855, -1548996.7744436443)),
    ((-7.703557781990744, 2.5030376544370734), (164.26291335985852, 72.61039612426815), (135.2451523888939, -490.4379074780597)),
    ((-8.1, 3.348592017918766e-42), (-0.14290814709358113, 2.8671267237737228e-42), (0.856218586328625, 3.876182753290323e-42)),
    ((12.0, 0.0), (1.3931846888753607e-13, 0.0), (-4.854736554985309e-13, 0.0)),
    ((8.48528137423857, 8.48528137423857), (2.9541416040264193e-06, -2.3147019396884934e-06), (-1.253337646318035e-05, 3.5688467266251996e-06)),
    ((2.4804385317916786e-42, 12.0), (20659441.47950501, -44627666.75747433), (-158985314.736904, 59155301.22464071)),
    ((-5.781044089220584, 10.515680160526362), (29447197422.68995, -159976120369.42053), (-525659938162.64136, 193211606267.91412)),
    ((-6.108496989004457, 10.328904324047324), (163661297020.9652, -14928432595.701092), (-323779784369.6854, -464020139268.3206)),
    ((-11.412678195541844, 3.708203932499368), (18058.78215502963, -40305.95463210077), (-147079.20560958787, -40640.581678294766)),
    ((-12.0, 4.960877063583357e-42), (-0.06655517505437313, 5.0755251816255344e-42), (1.0231104533679707, 3.962064496680171e-42)),
    ((25.0, 0.0), (8.116026824691387e-38, 0.0), (-4.066089337243281e-37, 0.0)),
    ((17.67766952966369, 17.67766952966369), (-3.8291510926263935e-16, -1.7407395353545246e-15), (-1.5469805300741297e-15, 8.783495706298964e-15)),
    ((5.167580274565997e-42, 25.0), (-4.585050249001211e+24, -1.7920504625684325e+24), (9.892894185708116e+24, 2.250050766367497e+25)),
    ((-12.043841852542885, 21.907667001096588), (-1.881982604526773e+35, -1.0714439853431527e+33), (4.7349082486610014e+35, 8.11014939047056e+35)),
    ((-12.726035393759286, 21.518550675098588), (1.3761447756353657e+35, 1.3687744494102419e+35), (2.5308896966481696e+35, -9.34876116220216e+35)),
    ((-23.77641290737884, 7.725424859373684), (-954394411901965.8, -3263775618468006.0), (-1.5370606750642914e+16, 7231986075985297.0)),
    ((-25.0, 1.0335160549131994e-41), (0.16352657883042948, 9.946339938179686e-42), (0.9623788513876974, -4.2251836156579326e-41)),
    ((40.0, 0.0), (6.365742658552915e-75, 0.0), (-4.030017977600678e-74, 0.0)),
    ((28.284271247461902, 28.284271247461902), (5.053731336053215e-30, 9.166532505999854e-30), (-7.406557129532972e-30, -6.581107591486962e-29)),
    ((8.268128439305595e-42, 40.0), (6.710548362077669e+50, -1.8488547494931223e+50), (-3.826731276726883e+51, -2.1700120259296454e+51)),
    ((-19.270146964068616, 35.05226720175454), (1.623778023796363e+72, 8.19234404987942e+71), (-7.675300913847576e+71, -1.1465644617656824e+73)),
    ((-20.361656630014856, 34.42968108015774), (-1.0153092473486708e+72, 1.6482522576126555e+72), (1.2224417574709511e+73, 4.127041165934281e+71)),
    ((-38.042260651806146, 12.360679774997894), (6.691762204320824e+31, -1.8937972804977673e+32), (-1.2484410503510052e+33, -2.3164464216116937e+32)),
    ((-40.0, 1.653625687861119e-41), (-0.04593392343795725, -2.297036354104813e-41), (-1.3890908752607183, 3.0383006296494603e-41)),
];
// (nu, w, I_nu(w), K_nu(w))
pub const BESSEL: &[(f64, (f64, f64), (f64, f64), (f64, f64))] = &[
    (-0.75, (0.1, 0.05), (2.2806096336103683, -0.8010835304371522), (4.804847604008588, -1.8747284959164667)),
    (-0.75, (1.5, -0.5), (1.176423784043656, -0.44079114707797196), (0.18637333471855724, 0.15111332497712576)),
    (-0.75, (0.01, 1.99), (-0.16789758588022163, 0.4114888653727357), (-0.8549385596392418, -0.261437499341571)),
    (-0.75, (2.01, 0.0), (1.9060482115555095, 0.0), (0.1262808781625254, 0.0)),
    (-0.75, (0.0, 4.0), (-0.04262500385367461, 0.1029058623997467), (0.06976962530129388, 0.6256374759363799)),
    (-0.75, (0.001, -4.0), (-0.042990534071639955, -0.1027544594572022), (0.06962105576086318, -0.6250266611608535)),
    (-0.75, (10.0, 3.0), (-2572.880621436607, 746.9959186440263), (-1.7853636627128242e-05, 1.4434583331352442e-07)),
    (-0.75, (20.0, 0.0), (42934125.453056306, 0.0), (5.820592089932799e-10, 0.0)),
    (-0.75, (3.0, 9.0), (-1.3297390892874053, 2.23014531859074), (-0.01990901535603846, 0.004343705622322743)),
    (-0.25, (0.1, 0.05), (1.6718145883430862, -0.18901772482620702), (2.5286273042879404, -0.5602919708521528)),
    (-0.25, (1.5, -0.5), (1.5153387057859433, -0.4453776630344286), (0.1693282739942572, 0.1283040888233683)),
    (-0.25, (0.01, 1.99), (0.010775643920618591, 0.00173952258341674), (-0.7984888770561324, -0.34869800292582986)),
    (-0.25, (2.01, 0.0), (2.270884329773626, 0.0), (0.11396439556919694, 0.0)),
    (-0.25, (0.0, 4.0), (-0.33211108273059825, 0.1375649146814268), (0.03137251520831591, 0.6241797336123631)),
    (-0.25, (0.001, -4.0), (-0.3321938533963291, -0.13736548592973266), (0.03126382789274941, -0.62355635410255)),
    (-0.25, (10.0, 3.0), (-2629.392382413049, 785.1541559103306), (-1.746495945270343e-05, 3.081507926768868e-08)),
    (-0.25, (20.0, 0.0), (43488477.76257914, 0.0), (5.750002072403683e-10, 0.0)),
    (-0.25, (3.0, 9.0), (-1.282939560143956, 2.27059608631958), (-0.019822233589086115, 0.0038267280293270618)),
    (0.0, (0.1, 0.05), (1.0018743156126533, 0.002502344048305067), (2.3143029547026734, -0.4562403451086413)),
    (0.0, (1.5, -0.5), (1.5247265350575945, -0.47523949213396444), (0.1672845613509406, 0.12565741212241097)),
    (0.0, (0.01, 1.99), (0.22965816080068108, 0.005773561803041658), (-0.790945985900506, -0.35897625237712055)),
    (0.0, (2.01, 0.0), (2.295566092423207, 0.0), (0.11250436099872804, 0.0)),
    (0.0, (0.0, 4.0), (-0.39714980986384735, 0.0), (0.026610451105001945, 0.623841462521423)),
    (0.0, (0.001, -4.0), (-0.3971500001833486, 6.604335420277795e-05), (0.0265068018845786, -0.6232167011400703)),
    (0.0, (10.0, 3.0), (-2636.532780815474, 790.0237119421089), (-1.7416912585968742e-05, 1.6957463039607932e-08)),
    (0.0, (20.0, 0.0), (43558282.559553534, 0.0), (5.741237815336525e-10, 0.0)),
    (0.0, (3.0, 9.0), (-1.2726251578875236, 2.2740109098517998), (-0.019810596997900748, 0.0037626102454747456)),
    (0.5, (0.1, 0.05), (0.25987414707382483, 0.0618051766903582), (3.2577884761681406, -0.943227413990186)),
    (0.5, (1.5, -0.5), (1.2850233772018596, -0.516461950739387), (0.17557422018541116, 0.13651042350627185)),
    (0.5, (0.01, 1.99), (0.36277853507895513, 0.3678701730759706), (-0.8204904211000946, -0.3170181572516155)),
    (0.5, (2.01, 0.0), (2.0624158351527813, 0.0), (0.11844861887946213, 0.0)),
    (0.5, (0.0, 4.0), (-0.2134900423278414, -0.2134900423278414), (0.04571108606597678, 0.6249876625257438)),
    (0.5, (0.001, -4.0), (-0.21364787033782204, 0.2133324638979418), (0.045587351387196544, -0.6243686807939094)),
    (0.5, (10.0, 3.0), (-2608.073368789093, 770.6794226921456), (-1.7609814485464093e-05, 7.283009365902791e-08)),
    (0.5, (20.0, 0.0), (43279746.27242893, 0.0), (5.776373974707445e-10, 0.0)),
    (0.5, (3.0, 9.0), (-1.2897151011859826, 2.2544634619930455), (-0.019856096993574594, 0.0040197574948240096)),
    (1.5, (0.1, 0.05), (0.007632821841684942, 0.0063831298774972515), (25.54718662955252, -21.520200630584235)),
    (1.5, (1.5, -0.5), (0.5224909808209185, -0.3766842209977618), (0.25361666759540347, 0.25353152164711723)),
    (1.5, (0.01, 1.99), (-0.34533266670243595, 0.3474173958757085), (-0.9818638459629085, 0.09447766528680988)),
    (1.5, (2.01, 0.0), (1.111745038014322, 0.0), (0.1773782800135229, 0.0)),
    (1.5, (0.0, 4.0), (-0.131016950539884, 0.131016950539884), (0.20195800169741274, 0.6135598910092496)),
    (1.5, (0.001, -4.0), (-0.13127959544263657, -0.13075435257447643), (0.20168236103919748, -0.6130108666995233)),
    (1.5, (10.0, 3.0), (-2390.011954129991, 628.1930527083389), (-1.9223389298066513e-05, 5.641855468056569e-07)),
    (1.5, (20.0, 0.0), (41115758.95880748, 0.0), (6.065192673442817e-10, 0.0)),
    (1.5, (3.0, 9.0), (-1.4848117279605793, 2.05290222690934), (-0.020115991143878013, 0.006139359110675603)),
    (2.3, (0.1, 0.05), (0.00023672416635529505, 0.00042958709299421654), (213.26754941661994, -388.08263991028076)),
    (2.3, (1.5, -0.5), (0.16651446415884788, -0.18948702741331186), (0.41673946880502455, 0.583729895763036)),
    (2.3, (0.01, 1.99), (-0.24143632223305056, -0.12050285416674765), (-0.851696040494502, 0.8996663368969261)),
    (2.3, (2.01, 0.0), (0.5067763480662909, 0.0), (0.31981239115921445, 0.0)),
    (2.3, (0.0, 4.0), (-0.37617929868403777, -0.1916729262524832), (0.4368244449333698, 0.5217353672184382)),
    (2.3, (0.001, -4.0), (-0.37610997725517237, 0.19180924635708718), (0.4363668204804592, -0.5213661143321883)),
    (2.3, (10.0, 3.0), (-2089.6583107207935, 448.8870049836696), (-2.1930758252561994e-05, 1.4791011293585377e-06)),
    (2.3, (20.0, 0.0), (38035457.61215977, 0.0), (6.531642087006757e-10, 0.0)),
    (2.3, (3.0, 9.0), (-1.7015208514387827, 1.7106430307306497), (-0.02012692775416407, 0.009550898087275146)),
];
