#![allow(clippy::excessive_precision, clippy::approx_constant)]

// (kind, order, z, value, derivative) computed with mpmath at 40 digits
pub const BESSEL_REF: &[(char, f64, f64, f64, f64)] = &[
    (
        'J',
        0.0,
        0.05,
        9.99375097649468636e-01,
        -2.49921883137597008e-02,
    ),
    (
        'J',
        0.0,
        0.5,
        9.38469807240812859e-01,
        -2.42268457674873899e-01,
    ),
    (
        'J',
        0.0,
        1.0,
        7.65197686557966605e-01,
        -4.40050585744933498e-01,
    ),
    (
        'J',
        0.0,
        1.9,
        2.81818559374385491e-01,
        -5.81157072713434086e-01,
    ),
    (
        'J',
        0.0,
        2.1,
        1.66606980331990340e-01,
        -5.68292135757038630e-01,
    ),
    (
        'J',
        0.0,
        5.0,
        -1.77596771314338292e-01,
        3.27579137591465230e-01,
    ),
    (
        'J',
        0.0,
        13.5,
        2.14989165880400818e-01,
        -3.80492920860014197e-02,
    ),
    (
        'J',
        0.0,
        20.0,
        1.67024664340583162e-01,
        -6.68331241758500505e-02,
    ),
    (
        'J',
        0.0,
        50.0,
        5.58123276692518155e-02,
        9.75118281251751429e-02,
    ),
    (
        'J',
        0.0,
        207.0,
        2.36051110029227851e-02,
        5.01252737843968649e-02,
    ),
    (
        'J',
        0.3333333333333333,
        0.05,
        3.27291640019550578e-01,
        2.17580631537694114e+00,
    ),
    (
        'J',
        0.3333333333333333,
        0.5,
        6.72830829497946037e-01,
        3.19790290150266499e-01,
    ),
    (
        'J',
        0.3333333333333333,
        1.0,
        7.30876402169448047e-01,
        -5.52851752674219030e-02,
    ),
    (
        'J',
        0.3333333333333333,
        1.9,
        4.87471343702940485e-01,
        -4.33798436644001584e-01,
    ),
    (
        'J',
        0.3333333333333333,
        2.1,
        3.96382995921181980e-01,
        -4.74297027188469889e-01,
    ),
    (
        'J',
        0.3333333333333333,
        5.0,
        -3.06420463800264165e-01,
        2.12890980262611273e-01,
    ),
    (
        'J',
        0.3333333333333333,
        13.5,
        2.01587545278036684e-01,
        7.32027782520278114e-02,
    ),
    (
        'J',
        0.3333333333333333,
        20.0,
        1.76060580012939005e-01,
        2.43826868739370900e-02,
    ),
    (
        'J',
        0.3333333333333333,
        50.0,
        -5.72266807717820131e-04,
        1.12843754063496490e-01,
    ),
    (
        'J',
        0.3333333333333333,
        207.0,
        -4.63361801509573710e-03,
        5.52741304567450700e-02,
    ),
    (
        'J',
        -0.3333333333333333,
        0.05,
        2.52322651527469732e+00,
        -1.69161843579135756e+01,
    ),
    (
        'J',
        -0.3333333333333333,
        0.5,
        1.06442046723062411e+00,
        -1.13292439550489954e+00,
    ),
    (
        'J',
        -0.3333333333333333,
        1.0,
        6.06887505046529330e-01,
        -8.00245808689138305e-01,
    ),
    (
        'J',
        -0.3333333333333333,
        1.9,
        -1.96238935007633647e-02,
        -5.77798658670930609e-01,
    ),
    (
        'J',
        -0.3333333333333333,
        2.1,
        -1.28418809974082448e-01,
        -5.08671944855012326e-01,
    ),
    (
        'J',
        -0.3333333333333333,
        5.0,
        4.33989061802963431e-03,
        3.56836009450486658e-01,
    ),
    (
        'J',
        -0.3333333333333333,
        13.5,
        1.70623925699105089e-01,
        -1.40628886581803531e-01,
    ),
    (
        'J',
        -0.3333333333333333,
        20.0,
        1.12952515881680246e-01,
        -1.40930803152526735e-01,
    ),
    (
        'J',
        -0.3333333333333333,
        50.0,
        9.74317558496517050e-02,
        5.59403637103703735e-02,
    ),
    (
        'J',
        -0.3333333333333333,
        207.0,
        4.55422217818982067e-02,
        3.15343014951860526e-02,
    ),
    (
        'J',
        0.5,
        0.05,
        1.78338082402197423e-01,
        1.78040802714706414e+00,
    ),
    (
        'J',
        0.5,
        0.5,
        5.40973789934528049e-01,
        4.49272090308876770e-01,
    ),
    (
        'J',
        0.5,
        1.0,
        6.71396707141803106e-01,
        9.54005144474745354e-02,
    ),
    (
        'J',
        0.5,
        1.9,
        5.47762303682864715e-01,
        -3.31282943999688495e-01,
    ),
    (
        'J',
        0.5,
        2.1,
        4.75276737643759994e-01,
        -3.91125685482582475e-01,
    ),
    (
        'J',
        0.5,
        5.0,
        -3.42167984798161795e-01,
        1.35434507664924569e-01,
    ),
    (
        'J',
        0.5,
        13.5,
        1.74547151040697790e-01,
        1.22726282024936170e-01,
    ),
    (
        'J',
        0.5,
        20.0,
        1.62880763855029864e-01,
        6.87348856886861037e-02,
    ),
    (
        'J',
        0.5,
        50.0,
        -2.96058318889246136e-02,
        1.09180814669428791e-01,
    ),
    (
        'J',
        0.5,
        207.0,
        -1.87613178239478956e-02,
        5.22322005164337216e-02,
    ),
    (
        'J',
        0.25,
        0.05,
        4.38476928708575353e-01,
        2.18361315558253644e+00,
    ),
    (
        'J',
        0.25,
        0.5,
        7.41656570157146033e-01,
        2.19095940011693663e-01,
    ),
    (
        'J',
        0.25,
        1.0,
        7.52231333340790065e-01,
        -1.43356717520692872e-01,
    ),
    (
        'J',
        0.25,
        1.9,
        4.46667267609628715e-01,
        -4.79961111256105522e-01,
    ),
    (
        'J',
        0.25,
        2.1,
        3.47521170916126942e-01,
        -5.08634383755695696e-01,
    ),
    (
        'J',
        0.25,
        5.0,
        -2.80972065761376011e-01,
        2.47609811921343598e-01,
    ),
    (
        'J',
        0.25,
        13.5,
        2.10277123829053919e-01,
        4.62520735807883734e-02,
    ),
    (
        'J',
        0.25,
        20.0,
        1.78298338534274903e-01,
        1.31318937729337187e-03,
    ),
    (
        'J',
        0.25,
        50.0,
        1.41060626808898869e-02,
        1.11813747506759653e-01,
    ),
    (
        'J',
        0.25,
        207.0,
        2.61276738836330397e-03,
        5.53889774486051867e-02,
    ),
    (
        'J',
        0.75,
        0.05,
        6.83840522610730389e-02,
        1.02478374198754141e+00,
    ),
    (
        'J',
        0.75,
        0.5,
        3.71105519878429213e-01,
        5.02941313709879378e-01,
    ),
    (
        'J',
        0.75,
        1.0,
        5.58652493204891742e-01,
        2.50395447357905643e-01,
    ),
    (
        'J',
        0.75,
        1.9,
        5.88869261094073115e-01,
        -1.70473195817205353e-01,
    ),
    (
        'J',
        0.75,
        2.1,
        5.46930054103187735e-01,
        -2.47318440617575130e-01,
    ),
    (
        'J',
        0.75,
        5.0,
        -3.56900309108274083e-01,
        9.66052813918102070e-03,
    ),
    (
        'J',
        0.75,
        13.5,
        1.14011328677250987e-01,
        1.80541497526793715e-01,
    ),
    (
        'J',
        0.75,
        20.0,
        1.23651813996719540e-01,
        1.25517067402026505e-01,
    ),
    (
        'J',
        0.75,
        50.0,
        -6.87435193108863196e-02,
        9.01666752077920908e-02,
    ),
    (
        'J',
        0.75,
        207.0,
        -3.72733365540619671e-02,
        4.11528522717399606e-02,
    ),
    (
        'J',
        1.0,
        0.05,
        2.49921883137597008e-02,
        4.99531331374274579e-01,
    ),
    (
        'J',
        1.0,
        0.5,
        2.42268457674873899e-01,
        4.53932891891065116e-01,
    ),
    (
        'J',
        1.0,
        1.0,
        4.40050585744933498e-01,
        3.25147100813033052e-01,
    ),
    (
        'J',
        1.0,
        1.9,
        5.81157072713434086e-01,
        -2.40535841590008848e-02,
    ),
    (
        'J',
        1.0,
        2.1,
        5.68292135757038630e-01,
        -1.04008322409456663e-01,
    ),
    (
        'J',
        1.0,
        5.0,
        -3.27579137591465230e-01,
        -1.12080943796045260e-01,
    ),
    (
        'J',
        1.0,
        13.5,
        3.80492920860014197e-02,
        2.12170699799956258e-01,
    ),
    (
        'J',
        1.0,
        20.0,
        6.68331241758500505e-02,
        1.63683008131790653e-01,
    ),
    (
        'J',
        1.0,
        50.0,
        -9.75118281251751429e-02,
        5.77625642317553187e-02,
    ),
    (
        'J',
        1.0,
        207.0,
        -5.01252737843968649e-02,
        2.38472620840068268e-02,
    ),
    (
        'J',
        2.5,
        0.05,
        2.97300924114052983e-05,
        1.48629225433988222e-03,
    ),
    (
        'J',
        2.5,
        0.5,
        9.23640781937972409e-03,
        4.55196605287526770e-02,
    ),
    (
        'J',
        2.5,
        1.0,
        4.94968102284779402e-02,
        1.16555813552232157e-01,
    ),
    (
        'J',
        2.5,
        1.9,
        2.02918094190409903e-01,
        2.08433426297271435e-01,
    ),
    (
        'J',
        2.5,
        2.1,
        2.45132995917670737e-01,
        2.12461818352917303e-01,
    ),
    (
        'J',
        2.5,
        5.0,
        2.40377201111317357e-01,
        -2.89839906700399441e-01,
    ),
    (
        'J',
        2.5,
        13.5,
        -2.00383056091171685e-01,
        -7.91535993769155732e-02,
    ),
    (
        'J',
        2.5,
        20.0,
        -1.72580193843876434e-01,
        -4.30903423618258022e-02,
    ),
    (
        'J',
        2.5,
        50.0,
        2.30372195096255304e-02,
        -1.10628733963799311e-01,
    ),
    (
        'J',
        2.5,
        207.0,
        1.80036726397559375e-02,
        -5.24949533691456277e-02,
    ),
    (
        'J',
        -2.7,
        0.05,
        8.42111551021847117e+03,
        -4.54616332735177653e+05,
    ),
    (
        'J',
        -2.7,
        0.5,
        1.74393380888684568e+01,
        -9.15044719016011641e+01,
    ),
    (
        'J',
        -2.7,
        1.0,
        3.01484154969063578e+00,
        -7.21439247930145289e+00,
    ),
    (
        'J',
        -2.7,
        1.9,
        7.24153338040851358e-01,
        -8.35774250013708642e-01,
    ),
    (
        'J',
        -2.7,
        2.1,
        5.76809747391718086e-01,
        -6.53893131269337902e-01,
    ),
    (
        'J',
        -2.7,
        5.0,
        -3.71339010163531935e-01,
        -3.76861579306302860e-02,
    ),
    (
        'J',
        -2.7,
        13.5,
        -1.36221180371443006e-02,
        2.15156133708562403e-01,
    ),
    (
        'J',
        -2.7,
        20.0,
        1.25058641783602192e-02,
        1.76873946864203352e-01,
    ),
    (
        'J',
        -2.7,
        50.0,
        -1.12117815406152677e-01,
        1.45198181996956735e-02,
    ),
    (
        'J',
        -2.7,
        207.0,
        -5.54536916439962030e-02,
        -6.39653313030264154e-04,
    ),
    (
        'J',
        5.0,
        0.05,
        8.13717316067309403e-11,
        8.13683410674589817e-09,
    ),
    (
        'J',
        5.0,
        0.5,
        8.05362724135747362e-06,
        8.02002039507128563e-05,
    ),
    (
        'J',
        5.0,
        1.0,
        2.49757730211234443e-04,
        1.22785031305378293e-03,
    ),
    (
        'J',
        5.0,
        1.9,
        5.53849301361588123e-03,
        1.36784695527081644e-02,
    ),
    (
        'J',
        5.0,
        2.1,
        8.82841711738646499e-03,
        1.94325456768610592e-02,
    ),
    (
        'J',
        5.0,
        5.0,
        2.61140546120170070e-01,
        1.30091814338478079e-01,
    ),
    (
        'J',
        5.0,
        13.5,
        1.97781757664905827e-01,
        9.16199159657913320e-02,
    ),
    (
        'J',
        5.0,
        20.0,
        1.51169767982394981e-01,
        9.28784915592645033e-02,
    ),
    (
        'J',
        5.0,
        50.0,
        -8.14002476965696442e-02,
        7.89810020513119215e-02,
    ),
    (
        'J',
        5.0,
        207.0,
        -4.86731565438493288e-02,
        2.67045071263768453e-02,
    ),
    (
        'J',
        0.31622776601683794,
        0.05,
        3.47764726758510223e-01,
        2.19285056876357842e+00,
    ),
    (
        'J',
        0.31622776601683794,
        0.5,
        6.86881639946895550e-01,
        3.01204487666624887e-01,
    ),
    (
        'J',
        0.31622776601683794,
        1.0,
        7.35798768783414325e-01,
        -7.27333432932033980e-02,
    ),
    (
        'J',
        0.31622776601683794,
        1.9,
        4.79682615687047176e-01,
        -4.43632705679481043e-01,
    ),
    (
        'J',
        0.31622776601683794,
        2.1,
        3.86857233021399349e-01,
        -4.81811728281655804e-01,
    ),
    (
        'J',
        0.31622776601683794,
        5.0,
        -3.01597692837071107e-01,
        2.20277643128404504e-01,
    ),
    (
        'J',
        0.31622776601683794,
        13.5,
        2.03647126721829191e-01,
        6.77647118185783492e-02,
    ),
    (
        'J',
        0.31622776601683794,
        20.0,
        1.76762277193859368e-01,
        1.96732116510769661e-02,
    ),
    (
        'J',
        0.31622776601683794,
        50.0,
        2.44684225205941486e-03,
        1.12788607590874917e-01,
    ),
    (
        'J',
        0.31622776601683794,
        207.0,
        -3.14873237952107820e-03,
        5.53750027836539607e-02,
    ),
    (
        'Y',
        0.0,
        0.05,
        -1.97931100081720968e+00,
        1.27898551711749704e+01,
    ),
    (
        'Y',
        0.0,
        0.5,
        -4.44518733506706565e-01,
        1.47147239267024310e+00,
    ),
    (
        'Y',
        0.0,
        1.0,
        8.82569642156769557e-02,
        7.81212821300288685e-01,
    ),
    (
        'Y',
        0.0,
        1.9,
        4.96819971283820216e-01,
        1.64405772331595257e-01,
    ),
    (
        'Y',
        0.0,
        2.1,
        5.18293737513760733e-01,
        5.16786121304235804e-02,
    ),
    (
        'Y',
        0.0,
        5.0,
        -3.08517625249033756e-01,
        -1.47863143391226831e-01,
    ),
    (
        'Y',
        0.0,
        13.5,
        3.00770090467855876e-02,
        2.14022930340028922e-01,
    ),
    (
        'Y',
        0.0,
        20.0,
        6.26405968093838306e-02,
        1.65511614362521292e-01,
    ),
    (
        'Y',
        0.0,
        50.0,
        -9.80649954700770765e-02,
        5.67956685620147686e-02,
    ),
    (
        'Y',
        0.0,
        207.0,
        -5.01821442410298954e-02,
        2.37263920633748460e-02,
    ),
    (
        'Y',
        0.3333333333333333,
        0.05,
        -2.72460909917169403e+00,
        2.07893295472928443e+01,
    ),
    (
        'Y',
        0.3333333333333333,
        0.5,
        -8.40627826043377713e-01,
        1.49281941953498043e+00,
    ),
    (
        'Y',
        0.3333333333333333,
        1.0,
        -2.78801641275992163e-01,
        8.92125355306245815e-01,
    ),
    (
        'Y',
        0.3333333333333333,
        1.9,
        3.04101431899549857e-01,
        4.16730778071679853e-01,
    ),
    (
        'Y',
        0.3333333333333333,
        2.1,
        3.77137098412380578e-01,
        3.13528252259401397e-01,
    ),
    (
        'Y',
        0.3333333333333333,
        5.0,
        -1.81923211293438386e-01,
        -2.89126067462918745e-01,
    ),
    (
        'Y',
        0.3333333333333333,
        13.5,
        -8.06329153335877263e-02,
        2.04647894776919970e-01,
    ),
    (
        'Y',
        0.3333333333333333,
        20.0,
        -2.87777076357151676e-02,
        1.76810225104676866e-01,
    ),
    (
        'Y',
        0.3333333333333333,
        50.0,
        -1.12834899330312793e-01,
        5.56003691431817084e-04,
    ),
    (
        'Y',
        0.3333333333333333,
        207.0,
        -5.52628486188825527e-02,
        -4.50014081548071390e-03,
    ),
    (
        'Y',
        -0.3333333333333333,
        0.05,
        -1.07886167488264473e+00,
        1.22789683164774690e+01,
    ),
    (
        'Y',
        -0.3333333333333333,
        0.5,
        1.62374677772888609e-01,
        1.02335622492121758e+00,
    ),
    (
        'Y',
        -0.3333333333333333,
        1.0,
        4.93556710667317933e-01,
        3.98184311418860404e-01,
    ),
    (
        'Y',
        -0.3333333333333333,
        1.9,
        5.74213283213456882e-01,
        -1.67315077219839764e-01,
    ),
    (
        'Y',
        -0.3333333333333333,
        2.1,
        5.31846293302117412e-01,
        -2.53989148354952843e-01,
    ),
    (
        'Y',
        -0.3333333333333333,
        5.0,
        -3.56329511537157917e-01,
        3.98059634125335210e-02,
    ),
    (
        'Y',
        -0.3333333333333333,
        13.5,
        1.34263477630531647e-01,
        1.65719412982315101e-01,
    ),
    (
        'Y',
        -0.3333333333333333,
        20.0,
        1.38084081078370391e-01,
        1.09521138797689335e-01,
    ),
    (
        'Y',
        -0.3333333333333333,
        50.0,
        -5.69130472583826499e-02,
        9.80035595231073531e-02,
    ),
    (
        'Y',
        -0.3333333333333333,
        207.0,
        -3.16442552219474149e-02,
        4.56187307398960296e-02,
    ),
    (
        'Y',
        0.5,
        0.05,
        -3.56378885116903810e+00,
        3.58162265940925835e+01,
    ),
    (
        'Y',
        0.5,
        0.5,
        -9.90245880243404875e-01,
        1.53121967017793303e+00,
    ),
    (
        'Y',
        0.5,
        1.0,
        -4.31098868018376102e-01,
        8.86946141150991130e-01,
    ),
    (
        'Y',
        0.5,
        1.9,
        1.87134969346303026e-01,
        4.98516259118048144e-01,
    ),
    (
        'Y',
        0.5,
        2.1,
        2.77964557472163420e-01,
        4.09094700150387736e-01,
    ),
    (
        'Y',
        0.5,
        5.0,
        -1.01217709185108404e-01,
        -3.32046213879650942e-01,
    ),
    (
        'Y',
        0.5,
        13.5,
        -1.29190991322739784e-01,
        1.79332002571169630e-01,
    ),
    (
        'Y',
        0.5,
        20.0,
        -7.28069047850618545e-02,
        1.64700936474656418e-01,
    ),
    (
        'Y',
        0.5,
        50.0,
        -1.08884756350539541e-01,
        -2.85169843254192180e-02,
    ),
    (
        'Y',
        0.5,
        207.0,
        -5.21868833236222504e-02,
        -1.86352625502193420e-02,
    ),
    (
        'Y',
        0.25,
        0.05,
        -2.46143095007425616e+00,
        1.67798622036543357e+01,
    ),
    (
        'Y',
        0.25,
        0.5,
        -7.56843545694495967e-01,
        1.49316845722110747e+00,
    ),
    (
        'Y',
        0.25,
        1.0,
        -1.94421753677164383e-01,
        8.83360486777696963e-01,
    ),
    (
        'Y',
        0.25,
        1.9,
        3.59021103877564862e-01,
        3.64358174212501162e-01,
    ),
    (
        'Y',
        0.25,
        2.1,
        4.21040870940259992e-01,
        2.56089171185514775e-01,
    ),
    (
        'Y',
        0.25,
        5.0,
        -2.18924127042082056e-01,
        -2.60225842570692145e-01,
    ),
    (
        'Y',
        0.25,
        13.5,
        -5.40046865044610733e-02,
        2.12382548459102094e-01,
    ),
    (
        'Y',
        0.25,
        20.0,
        -5.76722820870123783e-03,
        1.78484081327776656e-01,
    ),
    (
        'Y',
        0.25,
        50.0,
        -1.11950602012038922e-01,
        1.52260134955120915e-02,
    ),
    (
        'Y',
        0.25,
        207.0,
        -5.53951672577487550e-02,
        2.74657727103858225e-03,
    ),
    (
        'Y',
        0.75,
        0.05,
        -6.25697948869904774e+00,
        9.24242478239494432e+01,
    ),
    (
        'Y',
        0.75,
        0.5,
        -1.20538435977352276e+00,
        1.79733772627210997e+00,
    ),
    (
        'Y',
        0.75,
        1.0,
        -6.21869417442974637e-01,
        8.60832999473198357e-01,
    ),
    (
        'Y',
        0.75,
        1.9,
        6.78207978733248035e-03,
        5.67030574243583274e-01,
    ),
    (
        'Y',
        0.75,
        2.1,
        1.13879357178950411e-01,
        5.02784232566748090e-01,
    ),
    (
        'Y',
        0.75,
        5.0,
        2.65948802148448550e-02,
        -3.57469219852889708e-01,
    ),
    (
        'Y',
        0.75,
        13.5,
        -1.84928615467077534e-01,
        1.20775112115162522e-01,
    ),
    (
        'Y',
        0.75,
        20.0,
        -1.28660843330349106e-01,
        1.26822699701745589e-01,
    ),
    (
        'Y',
        0.75,
        50.0,
        -8.94847437987090072e-02,
        -6.78442661061487012e-02,
    ),
    (
        'Y',
        0.75,
        207.0,
        -4.10629691334962188e-02,
        -3.71740140012703016e-02,
    ),
    (
        'Y',
        1.0,
        0.05,
        -1.27898551711749704e+01,
        2.53817792422682203e+02,
    ),
    (
        'Y',
        1.0,
        0.5,
        -1.47147239267024310e+00,
        2.49842605183377975e+00,
    ),
    (
        'Y',
        1.0,
        1.0,
        -7.81212821300288685e-01,
        8.69469785515965654e-01,
    ),
    (
        'Y',
        1.0,
        1.9,
        -1.64405772331595257e-01,
        5.83349325142554553e-01,
    ),
    (
        'Y',
        1.0,
        2.1,
        -5.16786121304235804e-02,
        5.42902600433010085e-01,
    ),
    (
        'Y',
        1.0,
        5.0,
        1.47863143391226831e-01,
        -3.38090253927279150e-01,
    ),
    (
        'Y',
        1.0,
        13.5,
        -2.14022930340028922e-01,
        4.59305594423432828e-02,
    ),
    (
        'Y',
        1.0,
        20.0,
        -1.65511614362521292e-01,
        7.09161775275098938e-02,
    ),
    (
        'Y',
        1.0,
        50.0,
        -5.67956685620147686e-02,
        -9.69290820988367857e-02,
    ),
    (
        'Y',
        1.0,
        207.0,
        -2.37263920633748460e-02,
        -5.00675239895160065e-02,
    ),
    (
        'Y',
        2.5,
        0.05,
        -4.28368311749580880e+03,
        2.14112701759684656e+05,
    ),
    (
        'Y',
        2.5,
        0.5,
        -1.41385474222846224e+01,
        6.81712715610017739e+01,
    ),
    (
        'Y',
        2.5,
        1.0,
        -2.87638785746216152e+00,
        6.08847406849522432e+00,
    ),
    (
        'Y',
        2.5,
        1.9,
        -8.96508992325089737e-01,
        7.30346880611360105e-01,
    ),
    (
        'Y',
        2.5,
        2.1,
        -7.67839789839328435e-01,
        5.71182325246946898e-01,
    ),
    (
        'Y',
        2.5,
        5.0,
        2.94372374961792471e-01,
        1.74738255480243881e-01,
    ),
    (
        'Y',
        2.5,
        13.5,
        8.82761348557083575e-02,
        -2.00464286482328197e-01,
    ),
    (
        'Y',
        2.5,
        20.0,
        4.78287384209194061e-02,
        -1.72499701396897881e-01,
    ),
    (
        'Y',
        2.5,
        50.0,
        1.10530444556254367e-01,
        2.19016145341011034e-02,
    ),
    (
        'Y',
        2.5,
        207.0,
        5.24551327044409585e-02,
        1.78756911810265227e-02,
    ),
    (
        'Y',
        -2.7,
        0.05,
        6.11829856542170182e+03,
        -3.30298098901906225e+05,
    ),
    (
        'Y',
        -2.7,
        0.5,
        1.26773220222398333e+01,
        -6.64450916268717577e+01,
    ),
    (
        'Y',
        -2.7,
        1.0,
        2.23301936008957957e+00,
        -5.13236203301795246e+00,
    ),
    (
        'Y',
        -2.7,
        1.9,
        7.26964276393376796e-01,
        -3.76322210346365760e-01,
    ),
    (
        'Y',
        -2.7,
        2.1,
        6.67519343438248036e-01,
        -2.31157746051660923e-01,
    ),
    (
        'Y',
        -2.7,
        5.0,
        1.00753484360694631e-01,
        -3.32652749560135075e-01,
    ),
    (
        'Y',
        -2.7,
        13.5,
        -2.18863503717450503e-01,
        -4.93277957487552304e-03,
    ),
    (
        'Y',
        -2.7,
        20.0,
        -1.78766208829275741e-01,
        1.69443465699347685e-02,
    ),
    (
        'Y',
        -2.7,
        50.0,
        -1.34143670748790838e-02,
        -1.11825415352075908e-01,
    ),
    (
        'Y',
        -2.7,
        207.0,
        7.73684995039049923e-04,
        -5.54510052657088623e-02,
    ),
    (
        'Y',
        5.0,
        0.05,
        -7.82400620015300512e+08,
        7.82351717429274445e+10,
    ),
    (
        'Y',
        5.0,
        0.5,
        -7.94630147880747336e+03,
        7.89637422272552212e+04,
    ),
    (
        'Y',
        5.0,
        1.0,
        -2.60405866625812223e+02,
        1.26875091010008896e+03,
    ),
    (
        'Y',
        5.0,
        1.9,
        -1.24991128079446803e+01,
        2.96279698657114565e+01,
    ),
    (
        'Y',
        5.0,
        2.1,
        -8.01197342049728789e+00,
        1.67027940727877784e+01,
    ),
    (
        'Y',
        5.0,
        5.0,
        -4.53694822491101879e-01,
        2.61552535117408669e-01,
    ),
    (
        'Y',
        5.0,
        13.5,
        -1.07556981861869613e-01,
        1.88605152346043192e-01,
    ),
    (
        'Y',
        5.0,
        20.0,
        -1.00035767889532431e-01,
        1.49102679032037305e-01,
    ),
    (
        'Y',
        5.0,
        50.0,
        -7.85484139130816494e-02,
        -8.02032326890616265e-02,
    ),
    (
        'Y',
        5.0,
        207.0,
        -2.65945526491073135e-02,
        -4.85948227880558040e-02,
    ),
    (
        'Y',
        0.31622776601683794,
        0.05,
        -2.66389877644851181e+00,
        1.98147280907904211e+01,
    ),
    (
        'Y',
        0.31622776601683794,
        0.5,
        -8.24052622754439801e-01,
        1.49229668850563635e+00,
    ),
    (
        'Y',
        0.31622776601683794,
        1.0,
        -2.61927050408199635e-01,
        8.91100434330431290e-01,
    ),
    (
        'Y',
        0.31622776601683794,
        1.9,
        3.15627572395664968e-01,
        4.06602861518986336e-01,
    ),
    (
        'Y',
        0.31622776601683794,
        2.1,
        3.86514994415372959e-01,
        3.02242804604555326e-01,
    ),
    (
        'Y',
        0.31622776601683794,
        5.0,
        -1.89741238464555179e-01,
        -2.83583739834785353e-01,
    ),
    (
        'Y',
        0.31622776601683794,
        13.5,
        -7.52703720049838348e-02,
        2.06515779451325820e-01,
    ),
    (
        'Y',
        0.31622776601683794,
        20.0,
        -2.40861252297883896e-02,
        1.77397223415994926e-01,
    ),
    (
        'Y',
        0.31622776601683794,
        50.0,
        -1.12809692333374734e-01,
        3.57494493481596599e-03,
    ),
    (
        'Y',
        0.31622776601683794,
        207.0,
        -5.53673002687981516e-02,
        -3.01500091852494739e-03,
    ),
    (
        'I',
        0.0,
        0.05,
        1.00062509766303198e+00,
        2.50078133138444715e-02,
    ),
    (
        'I',
        0.0,
        0.5,
        1.06348337074132360e+00,
        2.57894305390896306e-01,
    ),
    (
        'I',
        0.0,
        1.0,
        1.26606587775200841e+00,
        5.65159103992485035e-01,
    ),
    (
        'I',
        0.0,
        1.9,
        2.12774019405388781e+00,
        1.44824437305488884e+00,
    ),
    (
        'I',
        0.0,
        2.1,
        2.44628312943618242e+00,
        1.74549980883610623e+00,
    ),
    (
        'I',
        0.0,
        5.0,
        2.72398718236044459e+01,
        2.43356421424505278e+01,
    ),
    (
        'I',
        0.0,
        13.5,
        7.99653681194589008e+04,
        7.69442183493465855e+04,
    ),
    (
        'I',
        0.0,
        20.0,
        4.35582825595535338e+07,
        4.24549733851277679e+07,
    ),
    (
        'I',
        0.0,
        50.0,
        2.93255378384933618e+20,
        2.90307859010355692e+20,
    ),
    (
        'I',
        0.3333333333333333,
        0.05,
        3.27598619812144387e-01,
        2.19013203923688549e+00,
    ),
    (
        'I',
        0.3333333333333333,
        0.5,
        7.38973156425119293e-01,
        6.28498771255240674e-01,
    ),
    (
        'I',
        0.3333333333333333,
        1.0,
        1.06463139788952943e+00,
        7.25262545779822299e-01,
    ),
    (
        'I',
        0.3333333333333333,
        1.9,
        2.00382080469534962e+00,
        1.48333848971303639e+00,
    ),
    (
        'I',
        0.3333333333333333,
        2.1,
        2.32785110070204748e+00,
        1.76565643156078256e+00,
    ),
    (
        'I',
        0.3333333333333333,
        5.0,
        2.68975530692683655e+01,
        2.41112599209845087e+01,
    ),
    (
        'I',
        0.3333333333333333,
        13.5,
        7.96237397102681425e+04,
        7.66418213655434083e+04,
    ),
    (
        'I',
        0.3333333333333333,
        20.0,
        4.34342639279384166e+07,
        4.23404572881133258e+07,
    ),
    (
        'I',
        0.3333333333333333,
        50.0,
        2.92926393656441930e+20,
        2.89988824928199049e+20,
    ),
    (
        'I',
        -0.3333333333333333,
        0.05,
        2.52796200374823865e+00,
        -1.67583347365794602e+01,
    ),
    (
        'I',
        -0.3333333333333333,
        0.5,
        1.28425456612739430e+00,
        -3.99886479616026969e-01,
    ),
    (
        'I',
        -0.3333333333333333,
        1.0,
        1.30635087474392719e+00,
        3.72070997024821160e-01,
    ),
    (
        'I',
        -0.3333333333333333,
        1.9,
        2.07658530070453207e+00,
        1.39239286981949983e+00,
    ),
    (
        'I',
        -0.3333333333333333,
        2.1,
        2.38465611784871223e+00,
        1.69596149904142401e+00,
    ),
    (
        'I',
        -0.3333333333333333,
        5.0,
        2.68996089058562369e+01,
        2.41090033228247123e+01,
    ),
    (
        'I',
        -0.3333333333333333,
        13.5,
        7.96237397105246928e+04,
        7.66418213652774575e+04,
    ),
    (
        'I',
        -0.3333333333333333,
        20.0,
        4.34342639279384166e+07,
        4.23404572881133258e+07,
    ),
    (
        'I',
        -0.3333333333333333,
        50.0,
        2.92926393656441930e+20,
        2.89988824928199049e+20,
    ),
    (
        'I',
        0.5,
        0.05,
        1.78486759412983059e-01,
        1.78784187777484349e+00,
    ),
    (
        'I',
        0.5,
        0.5,
        5.87993086790416286e-01,
        6.84396560624433103e-01,
    ),
    (
        'I',
        0.5,
        1.0,
        9.37674888245487614e-01,
        7.62362770470223605e-01,
    ),
    (
        'I',
        0.5,
        1.9,
        1.89176400649451004e+00,
        1.48050861491875141e+00,
    ),
    (
        'I',
        0.5,
        2.1,
        2.21440478467448587e+00,
        1.75458916027255318e+00,
    ),
    (
        'I',
        0.5,
        5.0,
        2.64775474975590654e+01,
        2.38321970145500437e+01,
    ),
    (
        'I',
        0.5,
        13.5,
        7.91988156733391661e+04,
        7.62655262042539543e+04,
    ),
    (
        'I',
        0.5,
        20.0,
        4.32797462724289298e+07,
        4.21977526156182066e+07,
    ),
    (
        'I',
        0.5,
        50.0,
        2.92515685299128992e+20,
        2.89590528446137729e+20,
    ),
    (
        'I',
        0.25,
        0.05,
        4.38915624958849782e-01,
        2.20335448715734916e+00,
    ),
    (
        'I',
        0.25,
        0.5,
        8.19675965988729494e-01,
        5.70238786649820639e-01,
    ),
    (
        'I',
        0.25,
        1.0,
        1.12385187167094602e+00,
        6.94904569481971657e-01,
    ),
    (
        'I',
        0.25,
        1.9,
        2.04873137683632489e+00,
        1.47891424984153463e+00,
    ),
    (
        'I',
        0.25,
        2.1,
        2.37228657413567934e+00,
        1.76528142801704457e+00,
    ),
    (
        'I',
        0.25,
        5.0,
        2.70464611941557642e+01,
        2.42094781633544933e+01,
    ),
    (
        'I',
        0.25,
        13.5,
        7.97730169124697713e+04,
        7.67739708607490320e+04,
    ),
    (
        'I',
        0.25,
        20.0,
        4.34884777625791430e+07,
        4.23905194810240641e+07,
    ),
    (
        'I',
        0.25,
        50.0,
        2.93070278722463662e+20,
        2.90128358901388935e+20,
    ),
    (
        'I',
        0.75,
        0.05,
        6.84329154621567265e-02,
        1.02747121807182284e+00,
    ),
    (
        'I',
        0.75,
        0.5,
        3.98585051677220359e-01,
        6.54092616477002009e-01,
    ),
    (
        'I',
        0.75,
        1.0,
        7.43687078056021633e-01,
        7.59987586605876397e-01,
    ),
    (
        'I',
        0.75,
        1.9,
        1.68301420232295840e+00,
        1.44317457447841080e+00,
    ),
    (
        'I',
        0.75,
        2.1,
        1.99698643660890229e+00,
        1.70501276498533771e+00,
    ),
    (
        'I',
        0.75,
        5.0,
        2.55600518367700609e+01,
        2.32141245420003379e+01,
    ),
    (
        'I',
        0.75,
        13.5,
        7.82512489515078196e+04,
        7.54257253042617667e+04,
    ),
    (
        'I',
        0.75,
        20.0,
        4.29341254530563056e+07,
        4.18784480580895320e+07,
    ),
    (
        'I',
        0.75,
        50.0,
        2.91593710295001268e+20,
        2.88696373068038636e+20,
    ),
    (
        'I',
        1.0,
        0.05,
        2.50078133138444715e-02,
        5.00468831386142510e-01,
    ),
    (
        'I',
        1.0,
        0.5,
        2.57894305390896306e-01,
        5.47694759959530875e-01,
    ),
    (
        'I',
        1.0,
        1.0,
        5.65159103992485035e-01,
        7.00906773759523261e-01,
    ),
    (
        'I',
        1.0,
        1.9,
        1.44824437305488884e+00,
        1.36550631349868312e+00,
    ),
    (
        'I',
        1.0,
        2.1,
        1.74549980883610623e+00,
        1.61509274427613181e+00,
    ),
    (
        'I',
        1.0,
        5.0,
        2.43356421424505278e+01,
        2.23727433951143411e+01,
    ),
    (
        'I',
        1.0,
        13.5,
        7.69442183493465855e+04,
        7.42657963898776652e+04,
    ),
    (
        'I',
        1.0,
        20.0,
        4.24549733851277679e+07,
        4.14355338902971447e+07,
    ),
    (
        'I',
        1.0,
        50.0,
        2.90307859010355692e+20,
        2.87449221204726514e+20,
    ),
    (
        'I',
        2.5,
        0.05,
        2.97407121978389046e-05,
        1.48724803512114150e-03,
    ),
    (
        'I',
        2.5,
        0.5,
        9.57224378631587984e-03,
        4.85422549024373401e-02,
    ),
    (
        'I',
        2.5,
        1.0,
        5.70989092030482481e-02,
        1.50778053339859192e-01,
    ),
    (
        'I',
        2.5,
        1.9,
        3.40170351288106354e-01,
        5.35083414146371839e-01,
    ),
    (
        'I',
        2.5,
        2.1,
        4.61047747779847028e-01,
        6.78483559421667382e-01,
    ),
    (
        'I',
        2.5,
        5.0,
        1.37668821386825826e+01,
        1.43010011954528462e+01,
    ),
    (
        'I',
        2.5,
        13.5,
        6.29027630655900575e+04,
        6.16835769079098973e+04,
    ),
    (
        'I',
        2.5,
        20.0,
        3.71123824286078066e+07,
        3.64767111552315056e+07,
    ),
    (
        'I',
        2.5,
        50.0,
        2.75315763003540210e+20,
        2.72899583442969428e+20,
    ),
    (
        'I',
        -2.7,
        0.05,
        8.41492579208629104e+03,
        -4.54529676527812204e+05,
    ),
    (
        'I',
        -2.7,
        0.5,
        1.62081556038943795e+01,
        -8.97501821750179261e+01,
    ),
    (
        'I',
        -2.7,
        1.0,
        2.29235245881160843e+00,
        -6.55749373832596927e+00,
    ),
    (
        'I',
        -2.7,
        1.9,
        5.56918651531191800e-01,
        -9.59756187275046385e-02,
    ),
    (
        'I',
        -2.7,
        2.1,
        5.69725381368011319e-01,
        2.13399334669036989e-01,
    ),
    (
        'I',
        -2.7,
        5.0,
        1.23443027027116248e+01,
        1.30801190663074696e+01,
    ),
    (
        'I',
        -2.7,
        13.5,
        6.04498132686467798e+04,
        5.94609369026818749e+04,
    ),
    (
        'I',
        -2.7,
        20.0,
        3.61380995428766310e+07,
        3.55681722473725080e+07,
    ),
    (
        'I',
        -2.7,
        50.0,
        2.72439705358168654e+20,
        2.70106522326489203e+20,
    ),
    (
        'I',
        5.0,
        0.05,
        8.13886858168200976e-11,
        8.13920769615995726e-09,
    ),
    (
        'I',
        5.0,
        0.5,
        8.22317131310926462e-06,
        8.25738367237308936e-05,
    ),
    (
        'I',
        5.0,
        1.0,
        2.71463155956971891e-04,
        1.37980444126200685e-03,
    ),
    (
        'I',
        5.0,
        1.9,
        7.48302334597045812e-03,
        2.08524373842066714e-02,
    ),
    (
        'I',
        5.0,
        2.1,
        1.27511786632194778e-02,
        3.25353866642005482e-02,
    ),
    (
        'I',
        5.0,
        5.0,
        2.15797454732254668e+00,
        2.95026021632032354e+00,
    ),
    (
        'I',
        5.0,
        13.5,
        3.09109124604196259e+04,
        3.19496052609642975e+04,
    ),
    (
        'I',
        5.0,
        20.0,
        2.30183922134136707e+07,
        2.31804622654114515e+07,
    ),
    (
        'I',
        5.0,
        50.0,
        2.27854830791128187e+20,
        2.26724411278799307e+20,
    ),
    (
        'I',
        0.31622776601683794,
        0.05,
        3.48095150116913499e-01,
        2.20815728413311163e+00,
    ),
    (
        'I',
        0.31622776601683794,
        0.5,
        7.55325628858108944e-01,
        6.18314629258284176e-01,
    ),
    (
        'I',
        0.31622776601683794,
        1.0,
        1.07710261393115969e+00,
        7.19653512729644618e-01,
    ),
    (
        'I',
        0.31622776601683794,
        1.9,
        2.01370302700623149e+00,
        1.48272380139306503e+00,
    ),
    (
        'I',
        0.31622776601683794,
        2.1,
        2.33769495167900576e+00,
        1.76588019694309506e+00,
    ),
    (
        'I',
        0.31622776601683794,
        5.0,
        2.69314978798176057e+01,
        2.41336886968312214e+01,
    ),
    (
        'I',
        0.31622776601683794,
        13.5,
        7.96578348457315587e+04,
        7.66720065297891852e+04,
    ),
    (
        'I',
        0.31622776601683794,
        20.0,
        4.34466495892501995e+07,
        4.23518947858262807e+07,
    ),
    (
        'I',
        0.31622776601683794,
        50.0,
        2.92959275399019921e+20,
        2.90020712452597776e+20,
    ),
    (
        'K',
        0.0,
        0.05,
        3.11423402947198991e+00,
        -1.99096743258825057e+01,
    ),
    (
        'K',
        0.0,
        0.5,
        9.24419071227665867e-01,
        -1.65644112000330090e+00,
    ),
    (
        'K',
        0.0,
        1.0,
        4.21024438240708343e-01,
        -6.01907230197234577e-01,
    ),
    (
        'K',
        0.0,
        1.9,
        1.28845979276047490e-01,
        -1.59660153032667618e-01,
    ),
    (
        'K',
        0.0,
        2.1,
        1.00783740889966944e-01,
        -1.22746411533507904e-01,
    ),
    (
        'K',
        0.0,
        5.0,
        3.69109833404259423e-03,
        -4.04461344545216459e-03,
    ),
    (
        'K',
        0.0,
        13.5,
        4.63484167140821762e-07,
        -4.80353533278845564e-07,
    ),
    (
        'K',
        0.0,
        20.0,
        5.74123781533652479e-10,
        -5.88305796955703838e-10,
    ),
    (
        'K',
        0.0,
        50.0,
        3.41016774978949556e-23,
        -3.44410222671755546e-23,
    ),
    (
        'K',
        0.3333333333333333,
        0.05,
        3.99101770686754032e+00,
        -3.43687169911888901e+01,
    ),
    (
        'K',
        0.3333333333333333,
        0.5,
        9.89031074246724318e-01,
        -1.86528451421815200e+00,
    ),
    (
        'K',
        0.3333333333333333,
        1.0,
        4.38430633441534379e-01,
        -6.40618606584719696e-01,
    ),
    (
        'K',
        0.3333333333333333,
        1.9,
        1.31980196600278293e-01,
        -1.64957107542783504e-01,
    ),
    (
        'K',
        0.3333333333333333,
        2.1,
        1.03032903985933871e-01,
        -1.26412624293959247e-01,
    ),
    (
        'K',
        0.3333333333333333,
        5.0,
        3.72887509605358825e-03,
        -4.09301630756706090e-03,
    ),
    (
        'K',
        0.3333333333333333,
        13.5,
        4.65329532100690560e-07,
        -4.82398482393156408e-07,
    ),
    (
        'K',
        0.3333333333333333,
        20.0,
        5.75682782477908652e-10,
        -5.89979555760556535e-10,
    ),
    (
        'K',
        0.3333333333333333,
        50.0,
        3.41392178135836260e-23,
        -3.44796800868576375e-23,
    ),
    (
        'K',
        -0.3333333333333333,
        0.05,
        3.99101770686754032e+00,
        -3.43687169911888901e+01,
    ),
    (
        'K',
        -0.3333333333333333,
        0.5,
        9.89031074246724318e-01,
        -1.86528451421815200e+00,
    ),
    (
        'K',
        -0.3333333333333333,
        1.0,
        4.38430633441534379e-01,
        -6.40618606584719696e-01,
    ),
    (
        'K',
        -0.3333333333333333,
        1.9,
        1.31980196600278293e-01,
        -1.64957107542783504e-01,
    ),
    (
        'K',
        -0.3333333333333333,
        2.1,
        1.03032903985933871e-01,
        -1.26412624293959247e-01,
    ),
    (
        'K',
        -0.3333333333333333,
        5.0,
        3.72887509605358825e-03,
        -4.09301630756706090e-03,
    ),
    (
        'K',
        -0.3333333333333333,
        13.5,
        4.65329532100690560e-07,
        -4.82398482393156408e-07,
    ),
    (
        'K',
        -0.3333333333333333,
        20.0,
        5.75682782477908652e-10,
        -5.89979555760556535e-10,
    ),
    (
        'K',
        -0.3333333333333333,
        50.0,
        3.41392178135836260e-23,
        -3.44796800868576375e-23,
    ),
    (
        'K',
        0.5,
        0.05,
        5.33163256910575889e+00,
        -5.86479582601633425e+01,
    ),
    (
        'K',
        0.5,
        0.5,
        1.07504760349992035e+00,
        -2.15009520699984069e+00,
    ),
    (
        'K',
        0.5,
        1.0,
        4.61068504447894545e-01,
        -6.91602756671841790e-01,
    ),
    (
        'K',
        0.5,
        1.9,
        1.35995213265667964e-01,
        -1.71783427282948986e-01,
    ),
    (
        'K',
        0.5,
        2.1,
        1.05908758996953595e-01,
        -1.31125130186704436e-01,
    ),
    (
        'K',
        0.5,
        5.0,
        3.77661337464288253e-03,
        -4.15427471210717044e-03,
    ),
    (
        'K',
        0.5,
        13.5,
        4.67646349532916840e-07,
        -4.84966584700802692e-07,
    ),
    (
        'K',
        0.5,
        20.0,
        5.77637397470744504e-10,
        -5.92078332407513093e-10,
    ),
    (
        'K',
        0.5,
        50.0,
        3.41862009545707479e-23,
        -3.45280629641164560e-23,
    ),
    (
        'K',
        0.25,
        0.05,
        3.58773754526402744e+00,
        -2.75564178924675183e+01,
    ),
    (
        'K',
        0.25,
        0.5,
        9.60316324931886012e-01,
        -1.77190797868385563e+00,
    ),
    (
        'K',
        0.25,
        1.0,
        4.30739774448585522e-01,
        -6.23460244308065015e-01,
    ),
    (
        'K',
        0.25,
        1.9,
        1.30600563447080015e-01,
        -1.62621981056856379e-01,
    ),
    (
        'K',
        0.25,
        2.1,
        1.02043318934317714e-01,
        -1.24797443803925795e-01,
    ),
    (
        'K',
        0.25,
        5.0,
        3.71230273203184075e-03,
        -4.07177439157586831e-03,
    ),
    (
        'K',
        0.25,
        13.5,
        4.64521302091807351e-07,
        -4.81502776875375069e-07,
    ),
    (
        'K',
        0.25,
        20.0,
        5.75000207240368296e-10,
        -5.89246711583784451e-10,
    ),
    (
        'K',
        0.25,
        50.0,
        3.41227888757488575e-23,
        -3.44627619913143161e-23,
    ),
    (
        'K',
        0.75,
        0.05,
        9.61773016614738196e+00,
        -1.47853690037474763e+02,
    ),
    (
        'K',
        0.75,
        0.5,
        1.29174981621791263e+00,
        -2.89794104925875518e+00,
    ),
    (
        'K',
        0.75,
        1.0,
        5.15775300695918593e-01,
        -8.17571249970524550e-01,
    ),
    (
        'K',
        0.75,
        1.9,
        1.45437696392766880e-01,
        -1.88010180444224850e-01,
    ),
    (
        'K',
        0.75,
        2.1,
        1.12649429645078444e-01,
        -1.42275258093274293e-01,
    ),
    (
        'K',
        0.75,
        5.0,
        3.88615925497427664e-03,
        -4.29522662027798183e-03,
    ),
    (
        'K',
        0.75,
        13.5,
        4.72900530540341663e-07,
        -4.90793553788493058e-07,
    ),
    (
        'K',
        0.75,
        20.0,
        5.82059208993279888e-10,
        -5.96827427577616283e-10,
    ),
    (
        'K',
        0.75,
        50.0,
        3.42921480469355731e-23,
        -3.46371710964528878e-23,
    ),
    (
        'K',
        1.0,
        0.05,
        1.99096743258825057e+01,
        -4.01307720547122130e+02,
    ),
    (
        'K',
        1.0,
        0.5,
        1.65644112000330090e+00,
        -4.23730131123426723e+00,
    ),
    (
        'K',
        1.0,
        1.0,
        6.01907230197234577e-01,
        -1.02293166843794281e+00,
    ),
    (
        'K',
        1.0,
        1.9,
        1.59660153032667618e-01,
        -2.12877638766925170e-01,
    ),
    (
        'K',
        1.0,
        2.1,
        1.22746411533507904e-01,
        -1.59234413048780249e-01,
    ),
    (
        'K',
        1.0,
        5.0,
        4.04461344545216459e-03,
        -4.50002102313302749e-03,
    ),
    (
        'K',
        1.0,
        13.5,
        4.80353533278845564e-07,
        -4.99065910346662125e-07,
    ),
    (
        'K',
        1.0,
        20.0,
        5.88305796955703838e-10,
        -6.03539071381437593e-10,
    ),
    (
        'K',
        1.0,
        50.0,
        3.44410222671755546e-23,
        -3.47904979432384641e-23,
    ),
    (
        'K',
        2.5,
        0.05,
        6.72318866964236167e+03,
        -3.36271397766069334e+05,
    ),
    (
        'K',
        2.5,
        0.5,
        2.04259044664984835e+01,
        -1.05354665142992189e+02,
    ),
    (
        'K',
        2.5,
        1.0,
        3.22747953113526176e+00,
        -8.99083583673394315e+00,
    ),
    (
        'K',
        2.5,
        1.9,
        4.63739910055504856e-01,
        -8.17755733478525926e-01,
    ),
    (
        'K',
        2.5,
        2.1,
        3.29253760963318320e-01,
        -5.48310264428024663e-01,
    ),
    (
        'K',
        2.5,
        5.0,
        6.49577500438575789e-03,
        -7.77982355176433816e-03,
    ),
    (
        'K',
        2.5,
        13.5,
        5.79265642837069820e-07,
        -6.09558235208886653e-07,
    ),
    (
        'K',
        2.5,
        20.0,
        6.68615287572386741e-10,
        -6.90096178290830064e-10,
    ),
    (
        'K',
        2.5,
        50.0,
        3.62783964529904771e-23,
        -3.66838447963116853e-23,
    ),
    (
        'K',
        -2.7,
        0.05,
        1.63385127859680015e+04,
        -8.82519838562993100e+05,
    ),
    (
        'K',
        -2.7,
        0.5,
        3.14587209043386906e+01,
        -1.74321249203615082e+02,
    ),
    (
        'K',
        -2.7,
        1.0,
        4.37424182619116309e+00,
        -1.29491707398960756e+01,
    ),
    (
        'K',
        -2.7,
        1.9,
        5.67107249543509440e-01,
        -1.04278112617844276e+00,
    ),
    (
        'K',
        -2.7,
        2.1,
        3.97034416518520283e-01,
        -6.87109278727834338e-01,
    ),
    (
        'K',
        -2.7,
        5.0,
        7.12624875563333104e-03,
        -8.65077763823248781e-03,
    ),
    (
        'K',
        -2.7,
        13.5,
        6.01101330981837827e-07,
        -6.34113220335229898e-07,
    ),
    (
        'K',
        -2.7,
        20.0,
        6.85760312761217965e-10,
        -7.08636021241599338e-10,
    ),
    (
        'K',
        -2.7,
        50.0,
        3.66537662652318775e-23,
        -3.70708764739434837e-23,
    ),
    (
        'K',
        5.0,
        0.05,
        1.22860801999791694e+09,
        -1.22868480400041641e+11,
    ),
    (
        'K',
        5.0,
        0.5,
        1.20979794760963941e+04,
        -1.21732039858874341e+05,
    ),
    (
        'K',
        5.0,
        1.0,
        3.60960589601240713e+02,
        -1.84903536385326629e+03,
    ),
    (
        'K',
        5.0,
        1.9,
        1.24689912541560748e+01,
        -3.55881463667460025e+01,
    ),
    (
        'K',
        5.0,
        2.1,
        7.21574601758268219e+00,
        -1.89334175148952610e+01,
    ),
    (
        'K',
        5.0,
        5.0,
        3.27062737120318581e-02,
        -4.79653395225324367e-02,
    ),
    (
        'K',
        5.0,
        13.5,
        1.12383099397735513e-06,
        -1.23477808962557814e-06,
    ),
    (
        'K',
        5.0,
        20.0,
        1.05386601399742332e-09,
        -1.11088986548904324e-09,
    ),
    (
        'K',
        5.0,
        50.0,
        4.36718225410098649e-23,
        -4.43200247712744200e-23,
    ),
    (
        'K',
        0.31622776601683794,
        0.05,
        3.89601898072150155e+00,
        -3.27409827593722369e+01,
    ),
    (
        'K',
        0.31622776601683794,
        0.5,
        9.82405498775767994e-01,
        -1.84366087292499414e+00,
    ),
    (
        'K',
        0.31622776601683794,
        1.0,
        4.36662249461004626e-01,
        -6.36665875125977498e-01,
    ),
    (
        'K',
        0.31622776601683794,
        1.9,
        1.31663691119033255e-01,
        -1.64420918294226837e-01,
    ),
    (
        'K',
        0.31622776601683794,
        2.1,
        1.02805944098392318e-01,
        -1.26041892321092308e-01,
    ),
    (
        'K',
        0.31622776601683794,
        5.0,
        3.72508093433796764e-03,
        -4.08815197919960502e-03,
    ),
    (
        'K',
        0.31622776601683794,
        13.5,
        4.65144672599540827e-07,
        -4.82193606863815539e-07,
    ),
    (
        'K',
        0.31622776601683794,
        20.0,
        5.75526694963641729e-10,
        -5.89811969639331407e-10,
    ),
    (
        'K',
        0.31622776601683794,
        50.0,
        3.41354619350339539e-23,
        -3.44758123665700101e-23,
    ),
];
// (n, alpha, z, value)
pub const HYP1F1_REF: &[(f64, f64, f64, f64)] = &[
    (0.5, 0.3333333333333333, 2.0, 1.18281532234052023e+01),
    (-0.3, 0.7, 5.0, -1.19740110341335324e+01),
    (
        0.16666666666666666,
        0.3333333333333333,
        7.9,
        9.39548117554702458e+02,
    ),
    (0.074, 0.3333333333333333, 29.0, 3.41107248396623901e+11),
    (2.3, 1.5, -8.0, -3.84509297048667240e-03),
    (-2.5, 0.4, 3.0, 5.22927874937397341e+00),
    (1.2, 2.7, -25.0, 3.57244139352358714e-02),
    (0.9, 1.9, 30.0, 3.21705142036933533e+11),
    (-4.2, 1.1, 12.0, 8.06156765712532177e+01),
    (3.0, 1.6666666666666667, 0.3, 1.67979172003968147e+00),
];
